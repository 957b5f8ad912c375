#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diomax/zeta.hpp"

namespace diomax::classify {

using poly::Int;
using poly::IntPoly;
using poly::Rat;

struct ClassificationVerdict {
    bool is_ds = false;
    bool is_dm = false;
    bool is_ihara_max = false;
    bool is_weil_max = false;
    bool is_weil_min = false;
    std::optional<Int> dm_two_alpha;
    std::optional<zeta::LPolynomial> dm_lpoly;
    std::vector<std::string> notes;
};

struct Genus2JacobianClass {
    std::vector<std::string> matched_cases; // labels like "1.2", "3.1.iii"
    std::vector<std::string> structure;     // tag per matched case
    bool verdict = false;                   // nonempty matched_cases
};

struct IharaEquivalence {
    bool attains_ihara = false; // N_1 equals the (exact) Ihara bound
    bool dm_and_ds = false;
    bool alpha_shape = false;   // 2alpha = (g - sqrt(D)) / (2g) as rationals
    bool agree = false;
};

/// Full verdict from counts. Throws impossible_counts when the counts
/// cannot come from any curve (N_1 > N_2, delta outside [0, 4qg^2], or
/// delta = 0 with g not dividing q + 1 - N_1).
ClassificationVerdict classify_counts(const Int& q, unsigned g, const Int& N1,
                                      const Int& N2);

/// (1 - 2aT + qT^2)^g with 2a = (q+1-N_1)/g.
/// Throws not_divisible / not_weil.
zeta::LPolynomial dm_lpoly(const Int& q, unsigned g, const Int& N1);

/// LX must divide LY; when LY has the equal-alpha square shape, LX must
/// carry the same quadratic factor.
bool check_covering_consistency(const zeta::LPolynomial& LX,
                                const zeta::LPolynomial& LY);

/// Decision procedure for (T^2 + aT + q)^2 being the characteristic
/// polynomial of the Jacobian of a genus-2 equal-alpha curve over F_{p^n}.
Genus2JacobianClass genus2_jacobian_classify(std::uint64_t p, unsigned n, const Int& a);

/// The three printed characterizations of attaining the Ihara bound,
/// evaluated independently; agree must hold on valid count grids.
IharaEquivalence ihara_equiv_check(const Int& q, unsigned g, const Int& N1,
                                   const Int& N2);

} // namespace diomax::classify
