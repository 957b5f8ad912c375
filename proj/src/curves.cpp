#include "diomax/curves.hpp"

#include <algorithm>
#include <sstream>

#include "fastfield.hpp"

namespace diomax::curves {

namespace {

using ff::elem_t;
using detail::FastField;

std::uint64_t checked_pow(std::uint64_t q, unsigned k, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (v > limit / q)
            throw budget_exceeded("field size q^k exceeds the enumeration budget");
        v *= q;
    }
    return v;
}

// ---- small polynomial helpers over an explicit field (packed coeffs) ----

void ptrim(std::vector<elem_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const std::vector<elem_t>& a) { return static_cast<int>(a.size()) - 1; }

std::vector<elem_t> padd(const ff::Field& F, std::vector<elem_t> a,
                         const std::vector<elem_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
    ptrim(a);
    return a;
}

std::vector<elem_t> pmul(const ff::Field& F, const std::vector<elem_t>& a,
                         const std::vector<elem_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<elem_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    ptrim(r);
    return r;
}

std::vector<elem_t> pscale(const ff::Field& F, std::vector<elem_t> a, elem_t s) {
    for (auto& v : a) v = F.mul(v, s);
    ptrim(a);
    return a;
}

std::vector<elem_t> pderiv(const ff::Field& F, const std::vector<elem_t>& a) {
    if (a.size() <= 1) return {};
    std::vector<elem_t> r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(i));
    ptrim(r);
    return r;
}

std::vector<elem_t> prem(const ff::Field& F, std::vector<elem_t> a,
                         const std::vector<elem_t>& b) {
    const int db = pdeg(b);
    const elem_t lead_inv = F.inv(b.back());
    while (pdeg(a) >= db) {
        elem_t c = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<elem_t> pgcd(const ff::Field& F, std::vector<elem_t> a,
                         std::vector<elem_t> b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        auto r = prem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<elem_t> embed_poly(const ff::Extension& E, const ff::Field& base,
                               const std::vector<elem_t>& a) {
    std::vector<elem_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = E.embed(base, a[i]);
    return r;
}

// ---- hyperelliptic helpers ----

// Odd characteristic: the complete-the-square form y^2 = w(x), w = f + h^2/4.
std::vector<elem_t> he_odd_w(const ff::Field& F, const Hyperelliptic& M) {
    std::vector<elem_t> w = M.f;
    ptrim(w);
    std::vector<elem_t> h = M.h;
    ptrim(h);
    if (!h.empty()) {
        elem_t quarter = F.inv(F.from_int(4));
        w = padd(F, w, pscale(F, pmul(F, h, h), quarter));
    }
    if (w.empty()) throw invalid_model("y^2 = 0 is not a curve");
    return w;
}

Int he_count(const Hyperelliptic& M, const ff::Field& F, unsigned k,
             const Budget& budget) {
    const std::uint64_t Q = checked_pow(F.q(), k, budget.max_field);
    ff::Extension E = ff::extend(F, k);
    if (F.p() != 2) {
        std::vector<elem_t> w = embed_poly(E, F, he_odd_w(F, M));
        FastField G(E.field);
        long n = 0;
        for (elem_t x = 0; x < Q; ++x) n += 1 + G.chi(G.eval(w, x));
        if (pdeg(w) % 2 == 1) n += 1;
        else n += 1 + G.chi(w.back());
        return Int(n);
    }
    // characteristic 2: y^2 + h(x) y = f(x), h != 0
    std::vector<elem_t> h = M.h, f = M.f;
    ptrim(h);
    ptrim(f);
    if (h.empty()) throw invalid_model("h = 0 needs odd characteristic");
    const int d = std::max(pdeg(f), 2 * pdeg(h));
    std::vector<elem_t> he = embed_poly(E, F, h), fe = embed_poly(E, F, f);
    FastField G(E.field, /*with_trace=*/true);
    long n = 0;
    for (elem_t x = 0; x < Q; ++x) {
        elem_t hx = G.eval(he, x);
        if (hx == 0) { n += 1; continue; }
        elem_t u = G.inv(hx);
        if (G.trace(G.mul(G.eval(fe, x), G.mul(u, u))) == 0) n += 2;
    }
    // infinity on the smooth model of the normalized equation
    if (d % 2 == 1) { n += 1; }
    else {
        const unsigned m = static_cast<unsigned>(d) / 2;
        elem_t hm = m < he.size() ? he[m] : 0;
        elem_t fd = static_cast<std::size_t>(d) < fe.size() ? fe[d] : 0;
        if (hm == 0) n += 1;
        else {
            elem_t u = G.inv(hm);
            if (G.trace(G.mul(fd, G.mul(u, u))) == 0) n += 2;
        }
    }
    return Int(n);
}

// ---- smooth plane helpers ----

// Evaluate a trivariate form on the standard projective charts.
struct ChartPolys {
    // z = 1 chart, grouped by the y-exponent: rows[j] = coefficients in x.
    std::vector<std::vector<elem_t>> rows;
    // z = 0, y = 1 chart: polynomial in x.
    std::vector<elem_t> line;
    // the point (1 : 0 : 0)
    elem_t apex = 0;
};

ChartPolys make_charts(const ff::Field& F, const SmoothPlane& M) {
    ChartPolys c;
    c.rows.assign(M.degree + 1, {});
    c.line.assign(M.degree + 1, 0);
    for (const auto& t : M.terms) {
        if (t.c == 0) continue;
        auto& row = c.rows[t.j];
        if (row.size() <= t.i) row.resize(t.i + 1, 0);
        row[t.i] = F.add(row[t.i], t.c);
        if (t.i + t.j == M.degree) c.line[t.i] = F.add(c.line[t.i], t.c);
        if (t.i == M.degree) c.apex = F.add(c.apex, t.c);
    }
    for (auto& row : c.rows) ptrim(row);
    ptrim(c.line);
    return c;
}

ChartPolys embed_charts(const ff::Extension& E, const ff::Field& base,
                        const ChartPolys& c) {
    ChartPolys r;
    r.rows.reserve(c.rows.size());
    for (const auto& row : c.rows) r.rows.push_back(embed_poly(E, base, row));
    r.line = embed_poly(E, base, c.line);
    r.apex = E.embed(base, c.apex);
    return r;
}

Int plane_count(const SmoothPlane& M, const ff::Field& F, unsigned k,
                const Budget& budget) {
    const std::uint64_t Q = checked_pow(F.q(), k, budget.max_field);
    ff::Extension E = ff::extend(F, k);
    ChartPolys c = embed_charts(E, F, make_charts(F, M));
    FastField G(E.field);
    long n = 0;
    std::vector<elem_t> a(c.rows.size());
    for (elem_t x = 0; x < Q; ++x) {
        for (std::size_t j = 0; j < c.rows.size(); ++j) a[j] = G.eval(c.rows[j], x);
        for (elem_t y = 0; y < Q; ++y) {
            elem_t v = 0;
            for (std::size_t j = a.size(); j-- > 0;) v = G.add(G.mul(v, y), a[j]);
            if (v == 0) ++n;
        }
        if (G.eval(c.line, x) == 0) ++n;
    }
    if (c.apex == 0) ++n;
    return Int(n);
}

// ---- Artin-Schreier-like helper ----

Int as_count(const ArtinSchreierLike& M, const ff::Field& F, unsigned k,
             const Budget& budget) {
    const std::uint64_t Q = checked_pow(F.q(), k, budget.max_field);
    ff::Extension E = ff::extend(F, k);
    FastField G(E.field);
    std::vector<elem_t> rhs;
    for (const auto& t : M.rhs) {
        if (rhs.size() <= t.i) rhs.resize(t.i + 1, 0);
        rhs[t.i] = E.field.add(rhs[t.i], E.embed(F, t.c));
    }
    ptrim(rhs);
    std::vector<std::uint32_t> lhs_count(Q, 0);
    for (elem_t y = 0; y < Q; ++y)
        ++lhs_count[G.sub(G.pow(y, M.lhs_exponent), y)];
    long n = 0;
    for (elem_t x = 0; x < Q; ++x) n += lhs_count[G.eval(rhs, x)];
    Int inf = M.default_infinity;
    if (auto it = M.infinity.find(k); it != M.infinity.end()) inf = it->second;
    return Int(n) + inf;
}

// ---- validation ----

std::string point_str(const ff::Field& F, std::initializer_list<elem_t> coords) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto c : coords) {
        if (!first) os << ":";
        os << c;
        first = false;
    }
    os << ") over F_" << F.q();
    return os.str();
}

void validate_hyperelliptic(const Hyperelliptic& M, const ff::Field& F,
                            unsigned declared_genus, ValidationReport& rep) {
    std::vector<elem_t> h = M.h, f = M.f;
    ptrim(h);
    ptrim(f);
    if (f.empty()) throw invalid_model("f = 0");
    if (F.p() != 2) {
        std::vector<elem_t> w = he_odd_w(F, M);
        auto g = pgcd(F, w, pderiv(F, w));
        if (pdeg(g) > 0)
            throw not_squarefree("f + h^2/4 has a repeated root");
        const int d = pdeg(w);
        if (declared_genus != static_cast<unsigned>((d - 1) / 2))
            throw invalid_model("declared genus does not match the model degree");
        rep.notes.push_back("squarefree check passed (gcd with derivative trivial)");
        return;
    }
    if (h.empty()) throw invalid_model("h = 0 needs odd characteristic");
    const int d = std::max(pdeg(f), 2 * pdeg(h));
    if (declared_genus != static_cast<unsigned>((d - 1) / 2))
        throw invalid_model("declared genus does not match the model degree");
    // affine singular point: h(x0) = 0 and f'(x0) = h'(x0) sqrt(f(x0)),
    // over extensions large enough to contain every root of h
    std::vector<elem_t> hp = pderiv(F, h), fp = pderiv(F, f);
    for (unsigned kk = 1; kk <= static_cast<unsigned>(std::max(pdeg(h), 1)); ++kk) {
        ff::Extension E = ff::extend(F, kk);
        FastField G(E.field);
        auto he = embed_poly(E, F, h), fe = embed_poly(E, F, f);
        auto hpe = embed_poly(E, F, hp), fpe = embed_poly(E, F, fp);
        for (elem_t x = 0; x < E.field.q(); ++x) {
            if (G.eval(he, x) != 0) continue;
            elem_t s = G.sqrt2(G.eval(fe, x));
            if (G.eval(fpe, x) == G.mul(G.eval(hpe, x), s))
                throw singular_point_found("affine singularity at x = " +
                                           point_str(E.field, {x}));
        }
    }
    if (d % 2 == 0) {
        const unsigned m = static_cast<unsigned>(d) / 2;
        elem_t hm = m < h.size() ? h[m] : 0;
        if (hm == 0) {
            elem_t fd = static_cast<std::size_t>(d) < f.size() ? f[d] : 0;
            elem_t fd1 = static_cast<std::size_t>(d) >= 1 && d - 1 < static_cast<int>(f.size()) ? f[d - 1] : 0;
            elem_t hm1 = (m >= 1 && m - 1 < h.size()) ? h[m - 1] : 0;
            FastField G(F);
            if (fd1 == G.mul(hm1, G.sqrt2(fd)))
                throw singular_point_found("singular point at infinity");
        }
    }
    rep.notes.push_back("char-2 smooth-model singularity scan passed");
}

void validate_plane(const SmoothPlane& M, const ff::Field& F,
                    unsigned declared_genus, unsigned max_extension,
                    const Budget& budget, ValidationReport& rep) {
    const unsigned d = M.degree;
    for (const auto& t : M.terms)
        if (t.i + t.j > d) throw invalid_model("term exceeds the declared degree");
    if (declared_genus != (d - 1) * (d - 2) / 2)
        throw invalid_model("declared genus does not match (d-1)(d-2)/2");
    // partial derivatives as term lists
    SmoothPlane FX{d >= 1 ? d - 1 : 0, {}}, FY = FX, FZ = FX;
    const std::uint64_t p = F.p();
    for (const auto& t : M.terms) {
        const unsigned m = d - t.i - t.j;
        if (t.i % p) FX.terms.push_back({t.i - 1, t.j, F.mul(t.c, F.from_int(t.i))});
        if (t.j % p) FY.terms.push_back({t.i, t.j - 1, F.mul(t.c, F.from_int(t.j))});
        if (m % p) FZ.terms.push_back({t.i, t.j, F.mul(t.c, F.from_int(m))});
    }
    constexpr std::uint64_t kScanWork = 300'000'000; // (q^k)^2 cap for the scan
    for (unsigned kk = 1; kk <= max_extension; ++kk) {
        std::uint64_t Q = 1;
        bool fits = true;
        for (unsigned i = 0; i < kk && fits; ++i) {
            Q *= F.q();
            if (Q > budget.max_field || Q * Q > kScanWork) fits = false;
        }
        if (!fits) break;
        ff::Extension E = ff::extend(F, kk);
        FastField G(E.field);
        ChartPolys cf = embed_charts(E, F, make_charts(F, M));
        ChartPolys cx = embed_charts(E, F, make_charts(F, FX));
        ChartPolys cy = embed_charts(E, F, make_charts(F, FY));
        ChartPolys cz = embed_charts(E, F, make_charts(F, FZ));
        auto eval_chart_z1 = [&](const ChartPolys& c, const std::vector<elem_t>& ax,
                                 elem_t y) {
            elem_t v = 0;
            for (std::size_t j = ax.size(); j-- > 0;) v = G.add(G.mul(v, y), ax[j]);
            return v;
        };
        std::vector<elem_t> ax(cx.rows.size()), ay(cy.rows.size()),
            az(cz.rows.size()), af(cf.rows.size());
        for (elem_t x = 0; x < Q; ++x) {
            for (std::size_t j = 0; j < cx.rows.size(); ++j) ax[j] = G.eval(cx.rows[j], x);
            bool others = false;
            for (elem_t y = 0; y < Q; ++y) {
                if (eval_chart_z1(cx, ax, y) != 0) continue;
                if (!others) {
                    for (std::size_t j = 0; j < cy.rows.size(); ++j) ay[j] = G.eval(cy.rows[j], x);
                    for (std::size_t j = 0; j < cz.rows.size(); ++j) az[j] = G.eval(cz.rows[j], x);
                    for (std::size_t j = 0; j < cf.rows.size(); ++j) af[j] = G.eval(cf.rows[j], x);
                    others = true;
                }
                if (eval_chart_z1(cy, ay, y) == 0 && eval_chart_z1(cz, az, y) == 0 &&
                    eval_chart_z1(cf, af, y) == 0)
                    throw singular_point_found("singular point " +
                                               point_str(E.field, {x, y, 1}));
            }
            if (G.eval(cx.line, x) == 0 && G.eval(cy.line, x) == 0 &&
                G.eval(cz.line, x) == 0 && G.eval(cf.line, x) == 0)
                throw singular_point_found("singular point " +
                                           point_str(E.field, {x, 1, 0}));
        }
        if (cx.apex == 0 && cy.apex == 0 && cz.apex == 0 && cf.apex == 0)
            throw singular_point_found("singular point " + point_str(E.field, {1, 0, 0}));
        rep.checked_extensions = kk;
    }
    rep.notes.push_back("smooth up to extension " +
                        std::to_string(rep.checked_extensions));
}

} // namespace

ValidationReport validate_model(const CurveModel& M, const ff::Field& F,
                                unsigned max_extension, const Budget& budget) {
    ValidationReport rep;
    if (const auto* he = std::get_if<Hyperelliptic>(&M.model)) {
        validate_hyperelliptic(*he, F, M.declared_genus, rep);
    } else if (const auto* pl = std::get_if<SmoothPlane>(&M.model)) {
        validate_plane(*pl, F, M.declared_genus, max_extension, budget, rep);
    } else {
        rep.notes.push_back(
            "Artin-Schreier-like model: declared infinity counts taken on trust");
    }
    return rep;
}

Int count_points(const CurveModel& M, const ff::Field& F, unsigned k,
                 const Budget& budget) {
    if (k == 0) throw degree_mismatch("extension degree must be positive");
    if (const auto* he = std::get_if<Hyperelliptic>(&M.model))
        return he_count(*he, F, k, budget);
    if (const auto* pl = std::get_if<SmoothPlane>(&M.model))
        return plane_count(*pl, F, k, budget);
    return as_count(std::get<ArtinSchreierLike>(M.model), F, k, budget);
}

std::vector<Int> count_profile(const CurveModel& M, const ff::Field& F,
                               unsigned m, const Budget& budget) {
    std::vector<Int> counts;
    counts.reserve(m);
    for (unsigned k = 1; k <= m; ++k) counts.push_back(count_points(M, F, k, budget));
    if (m >= 2 && counts[0] > counts[1])
        throw impossible_counts("N_1 > N_2 cannot happen for a curve");
    return counts;
}

} // namespace diomax::curves
