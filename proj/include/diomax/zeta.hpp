#pragma once

#include <vector>

#include "diomax/intpoly.hpp"

namespace diomax::zeta {

using poly::Int;
using poly::IntPoly;
using poly::Rat;

struct LPolynomial {
    IntPoly L; // degree 2g, L(0) = 1
    Int q;
    unsigned g = 0;
};

struct AlphaStats {
    Rat mean;     // E(alpha) = -a_1 / (2g)
    Rat sum_sq;   // sum of alpha_j^2 = (q^2 + 1 - N_2 + 2gq) / 4
    Rat variance; // V(alpha) = delta / (4 g^2)
};

/// Recovers L from N_1..N_g and validates the result is a q-Weil
/// polynomial. Throws non_integral_coefficient / not_weil.
LPolynomial lpoly_from_counts(const Int& q, unsigned g, const std::vector<Int>& counts);

/// Number of points of the Jacobian, L(1).
Int jacobian_order(const LPolynomial& L);

/// tau of the Jacobian: the coefficient a_1.
Int trace_tau(const LPolynomial& L);

/// Exact rational statistics of the alpha_j, from counts alone.
AlphaStats alpha_stats(const Int& q, unsigned g, const Int& N1, const Int& N2);

} // namespace diomax::zeta
