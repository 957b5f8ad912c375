#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "diomax/errors.hpp"

namespace diomax::poly {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer polynomial, coefficients low-to-high, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
    static IntPoly x() { return IntPoly({0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    IntPoly pow(unsigned e) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    IntPoly derivative() const;
    /// T^deg * this(1/T) for the given (>= degree) formal degree.
    IntPoly reciprocal(unsigned deg) const;

    std::string to_string(const std::string& var = "T") const;

private:
    std::vector<Int> c_;
    void trim();
};

/// Dense rational polynomial (only used for exact Sturm computations).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(std::size_t i) const;
    const Rat& leading() const { return c_.back(); }

    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    /// Remainder of this / o (o nonzero).
    RatPoly rem(const RatPoly& o) const;

    /// Divides by the content so coefficients stay small; sign preserved.
    void normalize_content();

private:
    std::vector<Rat> c_;
    void trim();
};

/// Exact division a / b over Q; returns quotient iff remainder is zero.
std::optional<RatPoly> divide_exact(const RatPoly& a, const RatPoly& b);

/// True iff a divides b in Z[T] (exact division, zero remainder, integral quotient).
bool divides(const IntPoly& a, const IntPoly& b);

/// gcd over Q returned as a primitive integer polynomial with positive leading coeff.
IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of f (f nonzero).
std::vector<RatPoly> sturm_chain(const RatPoly& f);
/// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b);
/// Number of distinct real roots on the whole line.
int sturm_count_all(const std::vector<RatPoly>& chain);

/// S_k = q^k + 1 - N_k for each supplied count.
std::vector<Int> counts_to_power_sums(const Int& q, const std::vector<Int>& counts);

/// L(T) = 1 + a_1 T + ... + q^g T^{2g} from the first g power sums of the
/// Frobenius eigenvalues (Newton identities plus the functional equation).
/// Throws non_integral_coefficient when the counts are inconsistent.
IntPoly power_sums_to_lpoly(const Int& q, unsigned g, const std::vector<Int>& power_sums);

/// N_k recovered from an L-polynomial. Throws functional_equation_violated.
Int lpoly_to_counts(const IntPoly& L, const Int& q, unsigned k);

/// a_{2g-i} == q^{g-i} a_i for all i <= g (L-orientation: L(0) = 1).
bool functional_equation_check(const IntPoly& L, const Int& q);

/// Real Weil polynomial h (monic, degree g) with f(T) = T^g h(T + q/T).
/// f is in the monic characteristic-polynomial orientation, f(0) = q^g.
IntPoly real_weil_transform(const IntPoly& f, const Int& q);

struct QWeilCertificate {
    bool weil = false;
    bool functional_equation = false;
    int h_squarefree_degree = 0;
    int real_root_count = 0;
    int e_squarefree_degree = 0;
    int e_root_count_in_range = 0;
    std::string reason;
};

/// Exact q-Weil test for a monic even-degree integer polynomial: all roots
/// of absolute value sqrt(q). Decided with rational-endpoint Sturm counts
/// on the real Weil polynomial and on the squared-roots polynomial.
QWeilCertificate is_q_weil(const IntPoly& f, const Int& q);

/// Integer square root certificate: r with r^2 = m, if m is a perfect square.
std::optional<Int> perfect_square_root(const Int& m);

Int isqrt(const Int& m);

} // namespace diomax::poly
