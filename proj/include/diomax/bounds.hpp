#pragma once

#include <optional>
#include <string>
#include <utility>

#include "diomax/intpoly.hpp"

namespace diomax::bounds {

using poly::Int;
using poly::Rat;

struct IharaBound {
    Int D;                         // (8q+1) g^2 + 4qg(q-1)
    std::optional<Int> exact_root; // set when D is a perfect square
    Int floor_bound;               // q + 1 + floor((floor(sqrt D) - g)/2)
};

struct DefectResult {
    Int delta;
    bool in_range; // 0 <= delta <= 4 q g^2
};

struct ParityBound {
    Rat value;
    bool even_case;
};

struct GenusBoundReport {
    Int general;                  // floor(23 q^2 ln q), certified upward ln q
    std::optional<Int> case_bound;
    std::string case_label;       // "i", "ii", "iii" or ""
};

/// [q+1-floor(2g sqrt q), q+1+floor(2g sqrt q)], exact integer sqrt.
std::pair<Int, Int> weil_interval(const Int& q, unsigned g);

IharaBound ihara_bound(const Int& q, unsigned g);

/// delta = 2qg^2 - (N_1-q-1)^2 - g(N_2-q^2-1); flags the interval check.
DefectResult dm_defect(const Int& q, unsigned g, const Int& N1, const Int& N2);

/// Upper bound on N_2 given N_1: q^2+1+2gq-(N_1-q-1)^2/g.
Rat dm_upper_N2(const Int& q, unsigned g, const Int& N1);

/// Lower bound on N_2 given N_1 (parity-dependent), g >= 2.
ParityBound dm_lower_N2(const Int& q, unsigned g, const Int& N1);

/// (lower, upper) bounds on a_2 given a_1, g >= 2.
std::pair<Rat, Rat> a2_bounds(const Int& q, unsigned g, const Int& a1);

/// (q + 1 + tau/g)^g, the Jacobian point-count ceiling.
Rat ahl_bound(const Int& q, unsigned g, const Int& tau);

/// Genus bounds for a hypothetical equal-alpha curve with the given 2*alpha.
/// force_case ∈ {"", "i", "ii", "iii"}: "" infers the applicable case;
/// "ii"/"iii" require q to be a perfect square (case_requires_square_q).
GenusBoundReport dm_genus_bounds(const Int& q, const Int& two_alpha,
                                 const std::string& force_case = "");

} // namespace diomax::bounds
