#pragma once

#include <string>
#include <vector>

#include "diomax/curves.hpp"
#include "diomax/intpoly.hpp"

namespace diomax::search {

using poly::Int;

struct IharaCandidate {
    unsigned g = 0;
    Int q;
    Int D;
    Int sqrtD;
    Int N_star;        // q + 1 + (sqrt D - g)/2
    bool in_range = true; // g >= (q - sqrt q)/2, by squared comparison
    std::string status;   // confirmed-curve | discarded-by-bound | unknown
};

struct SearchHit {
    curves::CurveModel model;
    Int N1, N2;
    Int delta;     // always 0 for emitted hits
    Int two_alpha; // (q + 1 - N_1) / 2
    std::string model_str;
};

/// All couples (g <= g_max, q in q_list) with D = (8q+1)g^2 + 4qg(q-1) a
/// perfect square, N* integral, and g >= (q - sqrt q)/2; annotated with
/// the published-table status.
std::vector<IharaCandidate> ihara_candidate_scan(unsigned g_max,
                                                 const std::vector<Int>& q_list);

/// Exhaustive search for genus-2 curves over F_q with all alpha_j equal
/// (delta = 0). Odd p: y^2 = f, f squarefree of degree 5 (monic) or 6
/// (leading coefficient 1 or a fixed non-square). p = 2: y^2 + h y = f with
/// h monic of degree <= 3 and f running over a transversal of the
/// substitutions y -> y + u. Hits are sorted by serialized model.
std::vector<SearchHit> genus2_dm_search(const ff::Field& F,
                                        const curves::Budget& budget = {},
                                        std::size_t max_hits = SIZE_MAX);

/// Prime powers 2 <= q <= q_max in increasing order.
std::vector<Int> prime_powers_upto(std::uint64_t q_max);

} // namespace diomax::search
