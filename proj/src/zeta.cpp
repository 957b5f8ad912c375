#include "diomax/zeta.hpp"

#include "diomax/bounds.hpp"

namespace diomax::zeta {

LPolynomial lpoly_from_counts(const Int& q, unsigned g, const std::vector<Int>& counts) {
    if (counts.size() != g) throw impossible_counts("need exactly g counts");
    IntPoly L = poly::power_sums_to_lpoly(q, g, poly::counts_to_power_sums(q, counts));
    // q-Weil validation on the monic characteristic-polynomial orientation
    IntPoly f = L.reciprocal(2 * g);
    auto cert = poly::is_q_weil(f, q);
    if (!cert.weil)
        throw not_weil("counts are not consistent with any curve of genus " +
                       std::to_string(g) + ": " + cert.reason);
    return {std::move(L), q, g};
}

Int jacobian_order(const LPolynomial& L) { return L.L.eval(1); }

Int trace_tau(const LPolynomial& L) { return L.L.coeff(1); }

AlphaStats alpha_stats(const Int& q, unsigned g, const Int& N1, const Int& N2) {
    if (N1 > N2) throw impossible_counts("N_1 > N_2");
    Int gg(g);
    AlphaStats s;
    s.mean = Rat(q + 1 - N1, 2 * gg);
    s.mean.canonicalize();
    s.sum_sq = Rat(q * q + 1 - N2 + 2 * gg * q, 4);
    s.sum_sq.canonicalize();
    s.variance = Rat(bounds::dm_defect(q, g, N1, N2).delta, 4 * gg * gg);
    s.variance.canonicalize();
    return s;
}

} // namespace diomax::zeta
