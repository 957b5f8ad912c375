#pragma once

#include <cstdint>
#include <vector>

#include "diomax/errors.hpp"

namespace diomax::ff {

/// Coefficient in the prime field F_p.
using coeff_t = std::uint32_t;

/// Packed field element: the coefficient vector (c_0, ..., c_{n-1}) encoded
/// as sum c_i * p^i. Values 0 .. q-1 enumerate the field; the packed value
/// order is the lexicographic order on (c_{n-1}, ..., c_0).
using elem_t = std::uint64_t;

bool is_prime(std::uint64_t p);

/// Monic irreducible polynomial of degree n over F_p with the
/// lexicographically least lower-coefficient vector (deterministic modulus).
std::vector<coeff_t> min_irreducible(std::uint64_t p, unsigned n);

/// Irreducibility test for a monic polynomial over F_p (coefficients
/// low-to-high, length deg+1).
bool is_irreducible(std::uint64_t p, const std::vector<coeff_t>& f);

/// An explicit finite field F_{p^n} = F_p[t]/(modulus), with exact
/// arithmetic on packed elements. Immutable after construction.
class Field {
public:
    static constexpr unsigned kMaxDegree = 32;

    /// Builds F_{p^n}. If modulus is empty a deterministic irreducible
    /// modulus is generated. Throws not_prime / degree_mismatch /
    /// reducible_modulus.
    Field(std::uint64_t p, unsigned n, std::vector<coeff_t> modulus = {});

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    const std::vector<coeff_t>& modulus() const { return modulus_; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }
    /// The class of t, the polynomial-basis generator (only meaningful for n > 1).
    elem_t gen() const { return n_ > 1 ? p_ : 1 % p_; }

    bool same_field(const Field& other) const;

    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t mul(elem_t a, elem_t b) const;
    elem_t pow(elem_t a, std::uint64_t k) const;
    elem_t inv(elem_t a) const;     // throws division_by_zero
    elem_t div(elem_t a, elem_t b) const;
    elem_t frobenius(elem_t a) const { return pow(a, p_); }

    /// Quadratic character of a: 0 if a = 0, +1 if a is a nonzero square,
    /// -1 otherwise. Throws even_characteristic when p = 2.
    int quadratic_character(elem_t a) const;

    /// Multiplicative order (a != 0).
    std::uint64_t mult_order(elem_t a) const;

    /// Absolute trace to F_p, returned as an integer in [0, p).
    coeff_t abs_trace(elem_t a) const;

    elem_t from_coeffs(const std::vector<coeff_t>& c) const;
    std::vector<coeff_t> coeffs(elem_t a) const;
    /// Prime-subfield constant v mod p.
    elem_t from_int(std::uint64_t v) const { return v % p_; }

private:
    std::uint64_t p_;
    unsigned n_;
    std::uint64_t q_;
    std::vector<coeff_t> modulus_;

    void decode(elem_t a, coeff_t* out) const;
    elem_t encode(const std::uint64_t* c) const;
};

/// F_{p^{nk}} together with the ring embedding of the base field, realized
/// by the images of the powers of the base generator.
struct Extension {
    Field field;
    std::vector<elem_t> gen_powers; // images of t^i for i < base.n()
    std::uint64_t base_p = 0;
    unsigned base_n = 0;

    elem_t embed(const Field& base, elem_t a) const;
};

/// Builds F_{p^{nk}} over F_p and the embedding F_{p^n} -> F_{p^{nk}}.
/// The image of the base generator is the first root of the base modulus
/// in enumeration order (deterministic).
Extension extend(const Field& base, unsigned k);

} // namespace diomax::ff
