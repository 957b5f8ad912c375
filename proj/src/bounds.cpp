#include "diomax/bounds.hpp"

#include <mpfr.h>

namespace diomax::bounds {

namespace {

Rat ratq(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

/// Certified upper bound of sqrt(q) as a rational (error < 1e-12).
Rat sqrt_upper(const Int& q) {
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_z(x, q.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(x, x, MPFR_RNDU);
    mpq_t out;
    mpq_init(out);
    mpfr_get_q(out, x);
    Rat r(out);
    mpq_clear(out);
    mpfr_clear(x);
    return r;
}

Int rat_floor(const Rat& r) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

/// Largest integer strictly below r.
Int rat_floor_strict(const Rat& r) {
    Int f = rat_floor(r);
    return r == Rat(f) ? f - 1 : f;
}

} // namespace

std::pair<Int, Int> weil_interval(const Int& q, unsigned g) {
    Int s = poly::isqrt(4 * Int(g) * Int(g) * q);
    return {q + 1 - s, q + 1 + s};
}

IharaBound ihara_bound(const Int& q, unsigned g) {
    IharaBound b;
    Int gg(g);
    b.D = (8 * q + 1) * gg * gg + 4 * q * gg * (q - 1);
    b.exact_root = poly::perfect_square_root(b.D);
    b.floor_bound = q + 1 + (poly::isqrt(b.D) - gg) / 2;
    return b;
}

DefectResult dm_defect(const Int& q, unsigned g, const Int& N1, const Int& N2) {
    Int gg(g);
    Int t = N1 - q - 1;
    Int delta = 2 * q * gg * gg - t * t - gg * (N2 - q * q - 1);
    return {delta, delta >= 0 && delta <= 4 * q * gg * gg};
}

Rat dm_upper_N2(const Int& q, unsigned g, const Int& N1) {
    Int gg(g);
    Int t = N1 - q - 1;
    return Rat(q * q + 1 + 2 * gg * q) - ratq(t * t, gg);
}

ParityBound dm_lower_N2(const Int& q, unsigned g, const Int& N1) {
    Int gg(g);
    Int t = N1 - q - 1;
    if (g % 2 == 0)
        return {Rat(q * q + 1 - 2 * q * gg) - ratq(t * t, gg), true};
    // odd genus: q^2 + 1 - 2q(g - 2/g) - t^2/g
    return {Rat(q * q + 1) - ratq(2 * q * (gg * gg - 2) + t * t, gg), false};
}

std::pair<Rat, Rat> a2_bounds(const Int& q, unsigned g, const Int& a1) {
    Int gg(g);
    Rat common = ratq((gg - 1) * a1 * a1, 2 * gg);
    Rat upper = common + Rat(gg * q);
    Rat lower = (g % 2 == 0) ? Rat(common - Rat(gg * q))
                             : Rat(common + ratq((2 - gg * gg) * q, gg));
    return {lower, upper};
}

Rat ahl_bound(const Int& q, unsigned g, const Int& tau) {
    Rat base = Rat(q + 1) + ratq(tau, Int(g));
    Rat r = 1;
    for (unsigned i = 0; i < g; ++i) r *= base;
    return r;
}

GenusBoundReport dm_genus_bounds(const Int& q, const Int& two_alpha,
                                 const std::string& force_case) {
    if (two_alpha * two_alpha > 4 * q + 2 * poly::isqrt(4 * q) + 1)
        throw not_weil("|2 alpha| exceeds 2 sqrt(q)");
    GenusBoundReport rep;
    {
        // floor(23 q^2 ln q) with ln q rounded upward so the bound is safe
        mpfr_t x;
        mpfr_init2(x, 128);
        mpfr_set_z(x, q.get_mpz_t(), MPFR_RNDU);
        mpfr_log(x, x, MPFR_RNDU);
        Int scale = 23 * q * q;
        mpfr_mul_z(x, x, scale.get_mpz_t(), MPFR_RNDU);
        mpfr_floor(x, x);
        mpfr_get_z(rep.general.get_mpz_t(), x, MPFR_RNDN);
        mpfr_clear(x);
    }
    std::optional<Int> root = poly::perfect_square_root(q);
    std::string which = force_case;
    if (which.empty()) {
        if (root && two_alpha == 2 * *root) which = "ii";
        else if (root && two_alpha == -2 * *root) which = "iii";
        else if (two_alpha > 0) which = "i";
    }
    if (which == "i") {
        // g < (sqrt q + 1)^4 (q^2 + 1) / (2 q^2)
        Rat s = root ? Rat(*root) : sqrt_upper(q);
        Rat s1 = s + 1;
        Rat x = s1 * s1 * s1 * s1 * Rat(q * q + 1) / Rat(2 * q * q);
        rep.case_bound = root ? rat_floor_strict(x) : rat_floor(x);
        rep.case_label = "i";
    } else if (which == "ii") {
        if (!root) throw case_requires_square_q("2 alpha = 2 sqrt(q) needs square q");
        rep.case_bound = rat_floor(ratq(q - *root, 2));
        rep.case_label = "ii";
    } else if (which == "iii") {
        if (!root) throw case_requires_square_q("2 alpha = -2 sqrt(q) needs square q");
        Int m = *root;
        rep.case_bound = rat_floor(ratq((m + 1) * (m + 1), 2 * m));
        rep.case_label = "iii";
    }
    return rep;
}

} // namespace diomax::bounds
