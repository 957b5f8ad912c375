#include "diomax/classify.hpp"

#include "diomax/bounds.hpp"

namespace diomax::classify {

zeta::LPolynomial dm_lpoly(const Int& q, unsigned g, const Int& N1) {
    Int t = q + 1 - N1;
    Int gg(g);
    if (t % gg != 0)
        throw not_divisible("g does not divide q + 1 - N_1");
    Int two_alpha = t / gg;
    if (two_alpha * two_alpha > 4 * q)
        throw not_weil("|2 alpha| exceeds 2 sqrt(q)");
    IntPoly factor({1, -two_alpha, q});
    return {factor.pow(g), q, g};
}

ClassificationVerdict classify_counts(const Int& q, unsigned g, const Int& N1,
                                      const Int& N2) {
    if (N1 > N2) throw impossible_counts("N_1 > N_2");
    auto defect = bounds::dm_defect(q, g, N1, N2);
    if (!defect.in_range)
        throw impossible_counts("delta outside [0, 4qg^2]");
    ClassificationVerdict v;
    Int gg(g);
    Int t = q + 1 - N1;
    v.is_ds = (N1 == N2);
    v.is_dm = (defect.delta == 0);
    if (v.is_dm) {
        if (t % gg != 0)
            throw impossible_counts(
                "delta = 0 with g not dividing q + 1 - N_1: no such curve");
        v.dm_two_alpha = t / gg;
        v.dm_lpoly = dm_lpoly(q, g, N1);
    }
    v.is_ihara_max = v.is_dm && v.is_ds;
    // exact Weil-bound attainment: N_1 - (q+1) = ±2g sqrt(q) needs 4g^2 q square
    if (auto s = poly::perfect_square_root(4 * gg * gg * q)) {
        v.is_weil_max = (N1 - q - 1 == *s);
        v.is_weil_min = (q + 1 - N1 == *s);
    }
    auto [lo, hi] = bounds::weil_interval(q, g);
    if (N1 < lo || N1 > hi)
        v.notes.push_back("N_1 outside the Weil interval");
    return v;
}

bool check_covering_consistency(const zeta::LPolynomial& LX,
                                const zeta::LPolynomial& LY) {
    if (LX.q != LY.q) throw field_mismatch("L-polynomials over different fields");
    if (!poly::divides(LX.L, LY.L)) return false;
    // if LY = (1 + cT + qT^2)^gY, LX must be the gX-th power of that factor
    Int c = LY.L.coeff(1);
    Int gy(LY.g);
    if (c % gy == 0) {
        IntPoly factor({1, c / gy, LY.q});
        if (LY.L == factor.pow(LY.g))
            return LX.L == factor.pow(LX.g);
    }
    return true;
}

namespace {

void match(Genus2JacobianClass& out, bool cond, const char* label, const char* tag) {
    if (!cond) return;
    out.matched_cases.emplace_back(label);
    out.structure.emplace_back(tag);
}

} // namespace

Genus2JacobianClass genus2_jacobian_classify(std::uint64_t p, unsigned n, const Int& a) {
    Genus2JacobianClass out;
    Int q = 1;
    for (unsigned i = 0; i < n; ++i) q *= static_cast<unsigned long>(p);
    const bool n_even = (n % 2 == 0);
    const Int root_q = n_even ? Int(poly::isqrt(q)) : Int(0); // p^{n/2} when n even
    // sqrt(2 p^n) exists exactly when p = 2 and n odd
    const Int root_2q = (p == 2 && !n_even) ? *poly::perfect_square_root(2 * q) : Int(0);
    const Int pa = Int(static_cast<unsigned long>(p));

    const char* simple = "simple-supersingular";
    const char* ordin = "split-ordinary";
    const char* ssing = "split-supersingular";

    match(out, n_even && p % 4 == 1 && a == 0, "1.1", simple);
    match(out, n_even && p % 3 == 1 && (a == root_q || a == -root_q), "1.2", simple);
    match(out,
          a * a <= 4 * q && gcd(a, pa) == 1 &&
              a * a - 4 * q != -3 && a * a - 4 * q != -4 && a * a - 4 * q != -7,
          "2", ordin);
    if (p == 2 && n > 1) {
        match(out, !n_even && a == 0, "3.1.i", ssing);
        match(out, !n_even && (a == root_2q || a == -root_2q), "3.1.ii", ssing);
        match(out, n_even && a == 0, "3.1.iii", ssing);
        match(out, n_even && (a == root_q || a == -root_q), "3.1.iv", ssing);
        match(out, n_even && n >= 4 && (a == 2 * root_q || a == -2 * root_q), "3.1.v",
              ssing);
    }
    if (p == 3) {
        match(out, !n_even && n >= 3 && a == 0, "3.2.i", ssing);
        match(out,
              n_even && (a == 0 || a == root_q || a == -root_q ||
                         (n >= 4 && (a == 2 * root_q || a == -2 * root_q))),
              "3.2.ii", ssing);
    }
    if (p > 3) {
        match(out, n_even && (a == 2 * root_q || a == -2 * root_q), "3.3.i", ssing);
        match(out, n_even && p % 3 != 1 && (a == root_q || a == -root_q), "3.3.ii",
              ssing);
        match(out, !n_even && a == 0, "3.3.iii", ssing);
        match(out, n_even && p % 4 != 1 && a == 0, "3.3.iv", ssing);
    }
    out.verdict = !out.matched_cases.empty();
    return out;
}

IharaEquivalence ihara_equiv_check(const Int& q, unsigned g, const Int& N1,
                                   const Int& N2) {
    IharaEquivalence e;
    Int gg(g);
    auto ib = bounds::ihara_bound(q, g);
    if (ib.exact_root && (*ib.exact_root - gg) % 2 == 0)
        e.attains_ihara = (N1 == q + 1 + (*ib.exact_root - gg) / 2);
    auto defect = bounds::dm_defect(q, g, N1, N2);
    e.dm_and_ds = (defect.delta == 0 && N1 == N2);
    if (ib.exact_root) {
        // 2 alpha = (g - sqrt D) / (2g), compared as exact rationals
        Rat lhs(q + 1 - N1, gg);
        lhs.canonicalize();
        Rat rhs(gg - *ib.exact_root, 2 * gg);
        rhs.canonicalize();
        e.alpha_shape = (lhs == rhs) && N1 == N2;
    }
    e.agree = (e.attains_ihara == e.dm_and_ds) && (e.dm_and_ds == e.alpha_shape);
    return e;
}

} // namespace diomax::classify
