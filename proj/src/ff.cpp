#include "diomax/ff.hpp"

#include <algorithm>
#include <cassert>

namespace diomax::ff {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Polynomial arithmetic over F_p on small coefficient vectors (low-to-high),
// used only for modulus generation and irreducibility testing.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod monic f
    const std::size_t n = f.size() - 1;
    for (std::size_t i = c.size(); i-- > n;) {
        std::uint64_t lead = c[i] % p;
        if (!lead) continue;
        for (std::size_t j = 0; j < n; ++j)
            c[i - n + j] = (c[i - n + j] + lead * (p - f[j] % p)) % p;
        c[i] = 0;
    }
    c.resize(std::min(c.size(), n));
    trim(c);
    return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// x^(p^m) mod f, by m successive p-th powers.
Poly poly_frob_power(unsigned m, const Poly& f, std::uint64_t p) {
    Poly g{0, 1};
    for (unsigned i = 0; i < m; ++i) g = poly_powmod(g, p, f, p);
    return g;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    auto inv_mod_p = [p](std::uint64_t v) {
        // p prime, v != 0
        std::uint64_t r = 1, base = v % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        std::uint64_t binv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = a.back() % p * binv % p;
            std::size_t shift = a.size() - b.size();
            if (c)
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[shift + j] = (a[shift + j] + c * (p - b[j] % p)) % p;
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_irreducible(std::uint64_t p, const std::vector<coeff_t>& fc) {
    const unsigned n = static_cast<unsigned>(fc.size()) - 1;
    if (n == 0) return false;
    Poly f(fc.begin(), fc.end());
    if (n == 1) return true;
    // x^(p^n) == x mod f
    Poly xn = poly_frob_power(n, f, p);
    Poly x{0, 1};
    if (xn != x) return false;
    // gcd(x^(p^(n/r)) - x, f) == 1 for each prime r | n
    for (std::uint64_t r : prime_factors(n)) {
        Poly g = poly_frob_power(static_cast<unsigned>(n / r), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        Poly d = poly_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

std::vector<coeff_t> min_irreducible(std::uint64_t p, unsigned n) {
    if (n == 1) return {0, 1}; // t
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < n; ++i) bound *= p;
    for (std::uint64_t v = 0; v < bound; ++v) {
        std::vector<coeff_t> f(n + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = static_cast<coeff_t>(t % p);
            t /= p;
        }
        f[n] = 1;
        if (is_irreducible(p, f)) return f;
    }
    throw reducible_modulus("no irreducible polynomial found (unreachable)");
}

Field::Field(std::uint64_t p, unsigned n, std::vector<coeff_t> modulus)
    : p_(p), n_(n) {
    if (!is_prime(p)) throw not_prime("p = " + std::to_string(p) + " is not prime");
    if (n < 1 || n > kMaxDegree)
        throw degree_mismatch("extension degree " + std::to_string(n) + " out of range");
    q_ = 1;
    for (unsigned i = 0; i < n; ++i) q_ *= p;
    if (modulus.empty()) {
        modulus_ = min_irreducible(p, n);
    } else {
        if (modulus.size() != n + 1)
            throw degree_mismatch("modulus degree != n");
        for (auto& c : modulus) c = static_cast<coeff_t>(c % p);
        if (modulus.back() != 1) throw non_monic("modulus must be monic");
        if (!is_irreducible(p, modulus))
            throw reducible_modulus("modulus is reducible over F_p");
        modulus_ = std::move(modulus);
    }
}

bool Field::same_field(const Field& o) const {
    return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
}

void Field::decode(elem_t a, coeff_t* out) const {
    for (unsigned i = 0; i < n_; ++i) {
        out[i] = static_cast<coeff_t>(a % p_);
        a /= p_;
    }
}

elem_t Field::encode(const std::uint64_t* c) const {
    elem_t a = 0;
    for (unsigned i = n_; i-- > 0;) a = a * p_ + c[i] % p_;
    return a;
}

elem_t Field::add(elem_t a, elem_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t c[kMaxDegree];
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = a % p_ + b % p_;
        a /= p_;
        b /= p_;
    }
    return encode(c);
}

elem_t Field::neg(elem_t a) const {
    if (p_ == 2) return a;
    std::uint64_t c[kMaxDegree];
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = (p_ - a % p_) % p_;
        a /= p_;
    }
    return encode(c);
}

elem_t Field::sub(elem_t a, elem_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t c[kMaxDegree];
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = a % p_ + p_ - b % p_;
        a /= p_;
        b /= p_;
    }
    return encode(c);
}

elem_t Field::mul(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return a * b % p_;
    coeff_t ca[kMaxDegree], cb[kMaxDegree];
    decode(a, ca);
    decode(b, cb);
    std::uint64_t acc[2 * kMaxDegree] = {0};
    for (unsigned i = 0; i < n_; ++i) {
        if (!ca[i]) continue;
        const std::uint64_t ai = ca[i];
        for (unsigned j = 0; j < n_; ++j) acc[i + j] += ai * cb[j];
    }
    // reduce by the monic modulus: x^n = -(m_0 + m_1 x + ... + m_{n-1} x^{n-1})
    for (unsigned i = 2 * n_ - 1; i >= n_; --i) {
        std::uint64_t lead = acc[i] % p_;
        if (!lead) continue;
        for (unsigned j = 0; j < n_; ++j)
            acc[i - n_ + j] += lead * (p_ - modulus_[j]);
        // acc[i] is dead from here on
    }
    return encode(acc);
}

elem_t Field::pow(elem_t a, std::uint64_t k) const {
    elem_t r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

elem_t Field::inv(elem_t a) const {
    if (a == 0) throw division_by_zero("inverse of zero");
    return pow(a, q_ - 2);
}

elem_t Field::div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

int Field::quadratic_character(elem_t a) const {
    if (p_ == 2) throw even_characteristic("quadratic character needs odd p");
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::uint64_t Field::mult_order(elem_t a) const {
    if (a == 0) throw division_by_zero("order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t r : prime_factors(q_ - 1))
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    return ord;
}

coeff_t Field::abs_trace(elem_t a) const {
    elem_t s = 0, t = a;
    for (unsigned i = 0; i < n_; ++i) {
        s = add(s, t);
        t = frobenius(t);
    }
    // s lies in the prime subfield
    return static_cast<coeff_t>(s % p_);
}

elem_t Field::from_coeffs(const std::vector<coeff_t>& c) const {
    if (c.size() > n_) throw degree_mismatch("coefficient vector longer than n");
    elem_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
    return a;
}

std::vector<coeff_t> Field::coeffs(elem_t a) const {
    std::vector<coeff_t> c(n_);
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = static_cast<coeff_t>(a % p_);
        a /= p_;
    }
    return c;
}

elem_t Extension::embed(const Field& base, elem_t a) const {
    if (base.p() != base_p || base.n() != base_n)
        throw field_mismatch("element does not belong to the extension's base field");
    elem_t r = 0;
    for (unsigned i = 0; i < base_n; ++i) {
        coeff_t c = static_cast<coeff_t>(a % base.p());
        a /= base.p();
        if (c) r = field.add(r, field.mul(field.from_int(c), gen_powers[i]));
    }
    return r;
}

Extension extend(const Field& base, unsigned k) {
    if (k == 0) throw degree_mismatch("extension degree k must be >= 1");
    Extension ext{Field(base.p(), base.n() * k,
                        k == 1 ? base.modulus() : std::vector<coeff_t>{}),
                  {}, base.p(), base.n()};
    if (k == 1) {
        for (unsigned i = 0; i < base.n(); ++i)
            ext.gen_powers.push_back(ext.field.pow(ext.field.gen(), i));
        return ext;
    }
    // root of the base modulus in the big field, first in enumeration order
    const auto& mod = base.modulus();
    elem_t root = 0;
    bool found = false;
    for (elem_t x = 0; x < ext.field.q(); ++x) {
        elem_t v = 0; // Horner
        for (std::size_t i = mod.size(); i-- > 0;)
            v = ext.field.add(ext.field.mul(v, x), ext.field.from_int(mod[i]));
        if (v == 0) {
            root = x;
            found = true;
            break;
        }
    }
    assert(found);
    (void)found;
    elem_t pw = ext.field.one();
    for (unsigned i = 0; i < base.n(); ++i) {
        ext.gen_powers.push_back(pw);
        pw = ext.field.mul(pw, root);
    }
    return ext;
}

} // namespace diomax::ff
