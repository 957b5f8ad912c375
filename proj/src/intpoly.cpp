#include "diomax/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace diomax::poly {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
} // namespace

// ---------------------------------------------------------------- IntPoly

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroInt;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(1);
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reciprocal(unsigned deg) const {
    std::vector<Int> r(deg + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[deg - i] = c_[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        Int abs_a = abs(a);
        if (i == 0 || abs_a != 1) os << abs_a.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroRat;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
    return RatPoly(std::move(r));
}

RatPoly RatPoly::rem(const RatPoly& o) const {
    if (o.is_zero()) throw division_by_zero("polynomial division by zero");
    std::vector<Rat> r(c_);
    const int db = o.degree();
    const Rat& lead = o.leading();
    while (static_cast<int>(r.size()) - 1 >= db) {
        Rat f = r.back() / lead;
        std::size_t shift = r.size() - 1 - db;
        for (int j = 0; j <= db; ++j) r[shift + j] -= f * o.coeff(j);
        // back() is now exactly zero
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return RatPoly(std::move(r));
}

void RatPoly::normalize_content() {
    if (c_.empty()) return;
    // lcm of denominators, gcd of numerators
    Int den = 1, num = 0;
    for (const auto& v : c_) {
        den = lcm(den, Int(v.get_den()));
        num = gcd(num, Int(v.get_num()));
    }
    if (num == 0) return;
    Rat scale(den, num); // positive * sign-preserving? num >= 0 from gcd
    for (auto& v : c_) {
        v *= scale;
        v.canonicalize();
    }
}

std::optional<RatPoly> divide_exact(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return RatPoly();
    const int db = b.degree();
    if (a.degree() < db) return std::nullopt;
    std::vector<Rat> r(a.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) r[i] = a.coeff(i);
    std::vector<Rat> qv(a.degree() - db + 1, 0);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        Rat f = r.back() / b.leading();
        std::size_t shift = r.size() - 1 - db;
        qv[shift] = f;
        for (int j = 0; j <= db; ++j) r[shift + j] -= f * b.coeff(j);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) return std::nullopt;
    return RatPoly(std::move(qv));
}

bool divides(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero();
    auto q = divide_exact(RatPoly(b), RatPoly(a));
    if (!q) return false;
    for (int i = 0; i <= q->degree(); ++i)
        if (q->coeff(i).get_den() != 1) return false;
    return true;
}

namespace {

IntPoly to_primitive_int(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int den = 1;
    for (int i = 0; i <= p.degree(); ++i) den = lcm(den, Int(p.coeff(i).get_den()));
    std::vector<Int> c(p.degree() + 1);
    Int content = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        Rat v = p.coeff(i) * Rat(den);
        c[i] = Int(v.get_num());
        content = gcd(content, c[i]);
    }
    if (c.back() < 0) content = -content;
    for (auto& v : c) v /= content;
    return IntPoly(std::move(c));
}

} // namespace

IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b) {
    RatPoly x(a), y(b);
    while (!y.is_zero()) {
        RatPoly r = x.rem(y);
        r.normalize_content();
        x = y;
        y = r;
    }
    if (x.is_zero()) return IntPoly();
    return to_primitive_int(x);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    IntPoly g = gcd_over_q(p, p.derivative());
    auto q = divide_exact(RatPoly(p), RatPoly(g));
    return to_primitive_int(*q);
}

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    RatPoly d = f.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.back().degree() >= 1) {
        RatPoly r = chain[chain.size() - 2].rem(chain.back()) * Rat(-1);
        if (r.is_zero()) break;
        r.normalize_content();
        chain.push_back(r);
    }
    return chain;
}

namespace {

int sign_of(const Rat& v) { return sgn(v); }

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign_of(p.leading());
        if (!positive && p.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

} // namespace

int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const std::vector<RatPoly>& chain) {
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

// ------------------------------------------------------------ zeta algebra

std::vector<Int> counts_to_power_sums(const Int& q, const std::vector<Int>& counts) {
    if (counts.empty()) throw impossible_counts("empty count vector");
    if (q < 2) throw impossible_counts("q must be >= 2");
    std::vector<Int> s;
    s.reserve(counts.size());
    Int qk = 1;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        qk *= q;
        s.push_back(qk + 1 - counts[k]);
    }
    return s;
}

IntPoly power_sums_to_lpoly(const Int& q, unsigned g, const std::vector<Int>& power_sums) {
    if (power_sums.size() != g)
        throw impossible_counts("need exactly g power sums");
    // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} S_i, for the 2g eigenvalues.
    std::vector<Int> e(g + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        Int acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            Int term = e[k - i] * power_sums[i - 1];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        Int kk(static_cast<unsigned long>(k));
        if (acc % kk != 0)
            throw non_integral_coefficient(
                "power sums do not come from an integral L-polynomial (k=" +
                std::to_string(k) + ")");
        e[k] = acc / kk;
    }
    std::vector<Int> a(2 * g + 1);
    a[0] = 1;
    for (unsigned i = 1; i <= g; ++i) a[i] = (i % 2 ? -e[i] : e[i]);
    Int qpow = 1;
    for (unsigned i = g; i-- > 0;) {
        qpow *= q;
        a[2 * g - i] = qpow * a[i];
    }
    return IntPoly(std::move(a));
}

bool functional_equation_check(const IntPoly& L, const Int& q) {
    if (L.degree() < 0 || L.degree() % 2 != 0) return false;
    if (L.coeff(0) != 1) return false;
    const unsigned g = static_cast<unsigned>(L.degree()) / 2;
    Int qpow = 1;
    for (unsigned i = g; i-- > 0;) {
        qpow *= q;
        if (L.coeff(2 * g - i) != qpow * L.coeff(i)) return false;
    }
    return true;
}

Int lpoly_to_counts(const IntPoly& L, const Int& q, unsigned k) {
    if (!functional_equation_check(L, q))
        throw functional_equation_violated("L does not satisfy the functional equation");
    const unsigned deg = static_cast<unsigned>(L.degree());
    // e_i = (-1)^i a_i; Newton forward for S_1..S_k
    std::vector<Int> e(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) e[i] = (i % 2 ? -L.coeff(i) : L.coeff(i));
    std::vector<Int> s(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        // S_m = sum_{i=1..m-1} (-1)^{i-1} e_i S_{m-i} + (-1)^{m-1} m e_m
        Int acc = 0;
        for (unsigned i = 1; i < m && i <= deg; ++i) {
            Int term = e[i] * s[m - i];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        if (m <= deg) {
            Int term = Int(static_cast<unsigned long>(m)) * e[m];
            if (m % 2 == 0) acc -= term;
            else acc += term;
        }
        s[m] = acc;
    }
    Int qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= q;
    return qk + 1 - s[k];
}

IntPoly real_weil_transform(const IntPoly& f, const Int& q) {
    if (f.degree() < 0 || f.degree() % 2 != 0) throw odd_degree("f must have even degree");
    if (f.leading() != 1) throw non_monic("f must be monic");
    const unsigned g = static_cast<unsigned>(f.degree()) / 2;
    // f(T) = sum_j h_j T^{g-j} (T^2+q)^j, solved from j = g downward.
    IntPoly t2q({q, 0, 1});
    IntPoly r = f;
    std::vector<Int> h(g + 1);
    for (unsigned j = g + 1; j-- > 0;) {
        h[j] = r.coeff(g + j);
        if (h[j] != 0) {
            IntPoly term = t2q.pow(j);
            // multiply by T^{g-j}
            std::vector<Int> shifted(g - j + term.coeffs().size(), 0);
            for (std::size_t i = 0; i < term.coeffs().size(); ++i)
                shifted[g - j + i] = term.coeffs()[i];
            r = r - IntPoly(std::move(shifted)) * h[j];
        }
    }
    if (!r.is_zero())
        throw functional_equation_violated("f is not of the form T^g h(T + q/T)");
    return IntPoly(std::move(h));
}

std::optional<Int> perfect_square_root(const Int& m) {
    if (m < 0) return std::nullopt;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    return std::nullopt;
}

Int isqrt(const Int& m) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

QWeilCertificate is_q_weil(const IntPoly& f, const Int& q) {
    QWeilCertificate cert;
    if (f.degree() < 0 || f.degree() % 2 != 0) throw odd_degree("q-Weil test needs even degree");
    if (f.leading() != 1) throw non_monic("q-Weil test needs a monic polynomial");
    const unsigned g = static_cast<unsigned>(f.degree()) / 2;
    if (g == 0) {
        cert.weil = cert.functional_equation = true;
        return cert;
    }
    // necessary: functional equation (via the reciprocal L-orientation)
    IntPoly qg = IntPoly::constant(1);
    cert.functional_equation = functional_equation_check(
        f.reciprocal(static_cast<unsigned>(f.degree())), q);
    if (!cert.functional_equation) {
        cert.reason = "functional equation fails";
        return cert;
    }
    IntPoly h;
    try {
        h = real_weil_transform(f, q);
    } catch (const functional_equation_violated&) {
        cert.reason = "no real Weil transform";
        return cert;
    }
    IntPoly h0 = squarefree_part(h);
    cert.h_squarefree_degree = h0.degree();
    auto chain_h = sturm_chain(RatPoly(h0));
    cert.real_root_count = sturm_count_all(chain_h);
    if (cert.real_root_count != h0.degree()) {
        cert.reason = "real Weil polynomial is not totally real";
        return cert;
    }
    // e(s) with roots the squares of the roots of h0:
    // h0(x) = A(x^2) + x B(x^2)  =>  e(s) = A(s)^2 - s B(s)^2.
    std::vector<Int> ac, bc;
    for (int i = 0; i <= h0.degree(); ++i) {
        if (i % 2 == 0) ac.push_back(h0.coeff(i));
        else bc.push_back(h0.coeff(i));
    }
    IntPoly A(std::move(ac)), B(std::move(bc));
    IntPoly e = A * A - IntPoly({0, 1}) * B * B;
    IntPoly e0 = squarefree_part(e);
    cert.e_squarefree_degree = e0.degree();
    auto chain_e = sturm_chain(RatPoly(e0));
    cert.e_root_count_in_range = sturm_count(chain_e, Rat(-1), Rat(4 * q));
    if (cert.e_root_count_in_range != e0.degree()) {
        cert.reason = "a squared root lies outside [0, 4q]";
        return cert;
    }
    cert.weil = true;
    return cert;
}

} // namespace diomax::poly
