#include "diomax/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "fastfield.hpp"

namespace diomax::search {

namespace {

using ff::elem_t;
using detail::FastField;

const std::set<std::pair<unsigned, unsigned>> kConfirmed = {
    {1, 2}, {1, 3}, {1, 4}, {3, 4}, {3, 9}, {6, 16}, {7, 7}, {10, 25}, {14, 8}};

const std::set<std::pair<unsigned, unsigned>> kDiscarded = {
    {4, 8},   {6, 9},   {8, 11},  {8, 19},  {10, 5},  {10, 16},
    {15, 25}, {16, 4},  {16, 13}, {18, 29}, {18, 41}};

std::string serialize_model(const curves::CurveModel& M) {
    const auto& he = std::get<curves::Hyperelliptic>(M.model);
    std::ostringstream os;
    os << "y^2";
    if (!he.h.empty()) {
        os << "+h*y;h=[";
        for (std::size_t i = 0; i < he.h.size(); ++i)
            os << (i ? "," : "") << he.h[i];
        os << "]";
    }
    os << "=f;f=[";
    for (std::size_t i = 0; i < he.f.size(); ++i) os << (i ? "," : "") << he.f[i];
    os << "]";
    return os.str();
}

void ptrim(std::vector<elem_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<elem_t> pderiv(const ff::Field& F, const std::vector<elem_t>& a) {
    if (a.size() <= 1) return {};
    std::vector<elem_t> r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(i));
    ptrim(r);
    return r;
}

std::vector<elem_t> prem(const ff::Field& F, std::vector<elem_t> a,
                         const std::vector<elem_t>& b) {
    const elem_t lead_inv = F.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        elem_t c = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        ptrim(a);
    }
    return a;
}

bool squarefree(const ff::Field& F, std::vector<elem_t> a) {
    std::vector<elem_t> b = pderiv(F, a);
    while (!b.empty()) {
        auto r = prem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

std::vector<elem_t> embed_poly(const ff::Extension& E, const ff::Field& base,
                               const std::vector<elem_t>& a) {
    std::vector<elem_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = E.embed(base, a[i]);
    return r;
}

void emit_hit(std::vector<SearchHit>& hits, const ff::Field& F,
              std::vector<elem_t> h, std::vector<elem_t> f, long n1,
              long n2) {
    SearchHit hit;
    hit.model.model = curves::Hyperelliptic{std::move(h), std::move(f)};
    hit.model.declared_genus = 2;
    hit.N1 = n1;
    hit.N2 = n2;
    hit.delta = 0;
    hit.two_alpha = (Int(F.q()) + 1 - n1) / 2;
    hit.model_str = serialize_model(hit.model);
    hit.model.name = hit.model_str;
    hits.push_back(std::move(hit));
}

void search_odd(const ff::Field& F, std::vector<SearchHit>& hits,
                std::size_t max_hits) {
    const std::uint64_t q = F.q();
    FastField G1(F);
    ff::Extension E2 = ff::extend(F, 2);
    FastField G2(E2.field);
    elem_t nonsquare = 0;
    for (elem_t a = 1; a < q; ++a)
        if (G1.chi(a) < 0) { nonsquare = a; break; }

    auto scan_family = [&](unsigned deg, elem_t lead) {
        std::vector<elem_t> f(deg + 1, 0);
        f[deg] = lead;
        while (true) {
            if (hits.size() >= max_hits) return;
            // N_1
            long n1 = 0;
            for (elem_t x = 0; x < q; ++x) n1 += 1 + G1.chi(G1.eval(f, x));
            n1 += (deg % 2 == 1) ? 1 : 1 + G1.chi(lead);
            long t = static_cast<long>(q) + 1 - n1;
            if (t % 2 == 0 && t * t <= 16 * static_cast<long>(q) &&
                squarefree(F, f)) {
                auto fe = embed_poly(E2, F, f);
                long n2 = 0;
                for (elem_t x = 0; x < E2.field.q(); ++x)
                    n2 += 1 + G2.chi(G2.eval(fe, x));
                n2 += (deg % 2 == 1) ? 1 : 1 + G2.chi(fe[deg]);
                // delta = 8q - t^2 - 2(N_2 - q^2 - 1)
                if (8 * static_cast<long>(q) - t * t -
                        2 * (n2 - static_cast<long>(q) * q - 1) ==
                    0)
                    emit_hit(hits, F, {}, f, n1, n2);
            }
            // odometer over the deg lower coefficients
            unsigned i = 0;
            while (i < deg && ++f[i] == q) f[i++] = 0;
            if (i == deg) break;
        }
    };

    scan_family(5, 1);
    scan_family(6, 1);
    scan_family(6, nonsquare);
}

// characteristic 2: f runs over a transversal of {u^2 + hu : deg u <= 3}
// inside polynomials of degree <= 6, computed by F_2 Gaussian elimination
// on bit-packed coefficient vectors (m bits per coefficient).
void search_even(const ff::Field& F, std::vector<SearchHit>& hits,
                 std::size_t max_hits) {
    const std::uint64_t q = F.q();
    const unsigned m = F.n();
    const unsigned bits = 7 * m;
    FastField G1(F, true);
    ff::Extension E2 = ff::extend(F, 2);
    FastField G2(E2.field, true);
    std::vector<ff::Extension> exts;
    std::vector<FastField> gexts;
    exts.reserve(3);
    gexts.reserve(3);
    for (unsigned k = 1; k <= 3; ++k) {
        exts.push_back(ff::extend(F, k));
        gexts.emplace_back(exts.back().field);
    }

    auto pack = [&](const std::vector<elem_t>& poly) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < poly.size(); ++i) v |= poly[i] << (i * m);
        return v;
    };
    auto unpack = [&](std::uint64_t v) {
        std::vector<elem_t> poly(7);
        for (unsigned i = 0; i < 7; ++i) poly[i] = (v >> (i * m)) & (q - 1);
        ptrim(poly);
        return poly;
    };

    // enumerate h = monic of degree dh
    for (unsigned dh = 0; dh <= 3; ++dh) {
        std::vector<elem_t> h(dh + 1, 0);
        h[dh] = 1;
        std::uint64_t h_count = 1;
        for (unsigned i = 0; i < dh; ++i) h_count *= q;
        for (std::uint64_t hidx = 0; hidx < h_count; ++hidx) {
            {
                std::uint64_t v = hidx;
                for (unsigned i = 0; i < dh; ++i) { h[i] = v % q; v /= q; }
            }
            // subspace W = {u^2 + h u}: generators from u = t^b x^j
            std::vector<std::uint64_t> rows;
            for (unsigned j = 0; j <= 3; ++j) {
                for (unsigned b = 0; b < m; ++b) {
                    elem_t tb = F.pow(F.gen(), b);
                    std::vector<elem_t> w(7, 0);
                    w[2 * j] = F.mul(tb, tb); // (t^b x^j)^2
                    for (std::size_t i = 0; i <= dh; ++i)
                        w[i + j] = F.add(w[i + j], F.mul(h[i], tb));
                    rows.push_back(pack(w));
                }
            }
            // Gaussian elimination over F_2
            std::vector<std::uint64_t> basis(bits, 0);
            for (std::uint64_t r : rows) {
                for (unsigned b = bits; r && b-- > 0;) {
                    if (!((r >> b) & 1)) continue;
                    if (!basis[b]) { basis[b] = r; r = 0; }
                    else r ^= basis[b];
                }
            }
            std::vector<unsigned> free_bits;
            for (unsigned b = 0; b < bits; ++b)
                if (!basis[b]) free_bits.push_back(b);

            // precompute roots of h in F_{q^k}, k <= 3, with the data needed
            // for the singularity test
            struct Root { unsigned k; elem_t x; elem_t hp_at_x; };
            std::vector<Root> roots;
            std::vector<elem_t> hp = pderiv(F, h);
            for (unsigned k = 1; k <= std::max(dh, 1u); ++k) {
                const auto& E = exts[k - 1];
                const auto& G = gexts[k - 1];
                auto he = embed_poly(E, F, h);
                auto hpe = embed_poly(E, F, hp);
                for (elem_t x = 0; x < E.field.q(); ++x)
                    if (G.eval(he, x) == 0)
                        roots.push_back({k, x, G.eval(hpe, x)});
            }

            const std::uint64_t f_count = 1ull << free_bits.size();
            for (std::uint64_t mask = 0; mask < f_count; ++mask) {
                if (hits.size() >= max_hits) return;
                std::uint64_t fv = 0;
                for (std::size_t b = 0; b < free_bits.size(); ++b)
                    if ((mask >> b) & 1) fv |= 1ull << free_bits[b];
                std::vector<elem_t> f = unpack(fv);
                const int d = std::max<int>(2 * static_cast<int>(dh),
                                            static_cast<int>(f.size()) - 1);
                if (d != 5 && d != 6) continue;
                // affine singularities at the roots of h
                bool singular = false;
                std::vector<elem_t> fp = pderiv(F, f);
                for (const auto& r : roots) {
                    const auto& E = exts[r.k - 1];
                    const auto& G = gexts[r.k - 1];
                    auto fe = embed_poly(E, F, f);
                    auto fpe = embed_poly(E, F, fp);
                    if (G.eval(fpe, r.x) ==
                        G.mul(r.hp_at_x, G.sqrt2(G.eval(fe, r.x)))) {
                        singular = true;
                        break;
                    }
                }
                if (singular) continue;
                if (d == 6 && dh < 3) {
                    // infinity: h_3 = 0, singular iff f_5 = h_2 sqrt(f_6)
                    elem_t h2 = 2 < h.size() ? h[2] : 0;
                    elem_t f6 = f.size() > 6 ? f[6] : 0;
                    elem_t f5 = f.size() > 5 ? f[5] : 0;
                    if (f5 == G1.mul(h2, G1.sqrt2(f6))) continue;
                }
                // N_1
                long n1 = 0;
                for (elem_t x = 0; x < q; ++x) {
                    elem_t hx = G1.eval(h, x);
                    if (hx == 0) { n1 += 1; continue; }
                    elem_t u = G1.inv(hx);
                    if (G1.trace(G1.mul(G1.eval(f, x), G1.mul(u, u))) == 0) n1 += 2;
                }
                if (d % 2 == 1) n1 += 1;
                else {
                    elem_t h3 = 3 < h.size() ? h[3] : 0;
                    elem_t f6 = f.size() > 6 ? f[6] : 0;
                    if (h3 == 0) n1 += 1;
                    else {
                        elem_t u = G1.inv(h3);
                        if (G1.trace(G1.mul(f6, G1.mul(u, u))) == 0) n1 += 2;
                    }
                }
                long t = static_cast<long>(q) + 1 - n1;
                if (t % 2 != 0 || t * t > 16 * static_cast<long>(q)) continue;
                // N_2
                auto he2 = embed_poly(E2, F, h);
                auto fe2 = embed_poly(E2, F, f);
                long n2 = 0;
                for (elem_t x = 0; x < E2.field.q(); ++x) {
                    elem_t hx = G2.eval(he2, x);
                    if (hx == 0) { n2 += 1; continue; }
                    elem_t u = G2.inv(hx);
                    if (G2.trace(G2.mul(G2.eval(fe2, x), G2.mul(u, u))) == 0) n2 += 2;
                }
                if (d % 2 == 1) n2 += 1;
                else {
                    elem_t h3 = 3 < he2.size() ? he2[3] : 0;
                    elem_t f6 = fe2.size() > 6 ? fe2[6] : 0;
                    if (h3 == 0) n2 += 1;
                    else {
                        elem_t u = G2.inv(h3);
                        if (G2.trace(G2.mul(f6, G2.mul(u, u))) == 0) n2 += 2;
                    }
                }
                if (8 * static_cast<long>(q) - t * t -
                        2 * (n2 - static_cast<long>(q) * q - 1) ==
                    0)
                    emit_hit(hits, F, h, f, n1, n2);
            }
        }
    }
}

} // namespace

std::vector<IharaCandidate> ihara_candidate_scan(unsigned g_max,
                                                 const std::vector<Int>& q_list) {
    std::vector<IharaCandidate> out;
    for (unsigned g = 1; g <= g_max; ++g) {
        for (const Int& q : q_list) {
            Int gg(g);
            Int D = (8 * q + 1) * gg * gg + 4 * q * gg * (q - 1);
            auto r = poly::perfect_square_root(D);
            if (!r || (*r - gg) % 2 != 0) continue;
            Int diff = q - 2 * gg;
            bool in_range = diff <= 0 || diff * diff <= q;
            if (!in_range) continue;
            IharaCandidate c;
            c.g = g;
            c.q = q;
            c.D = D;
            c.sqrtD = *r;
            c.N_star = q + 1 + (*r - gg) / 2;
            c.in_range = true;
            auto key = std::make_pair(g, static_cast<unsigned>(q.get_ui()));
            if (kConfirmed.count(key)) c.status = "confirmed-curve";
            else if (kDiscarded.count(key)) c.status = "discarded-by-bound";
            else c.status = "unknown";
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<SearchHit> genus2_dm_search(const ff::Field& F,
                                        const curves::Budget& budget,
                                        std::size_t max_hits) {
    if (F.q() > budget.genus2_max_q)
        throw budget_exceeded("genus-2 search budget: q > " +
                              std::to_string(budget.genus2_max_q));
    std::vector<SearchHit> hits;
    if (F.p() == 2) search_even(F, hits, max_hits);
    else search_odd(F, hits, max_hits);
    std::sort(hits.begin(), hits.end(),
              [](const SearchHit& a, const SearchHit& b) {
                  return a.model_str < b.model_str;
              });
    return hits;
}

std::vector<Int> prime_powers_upto(std::uint64_t q_max) {
    std::vector<Int> out;
    for (std::uint64_t p = 2; p <= q_max; ++p) {
        if (!ff::is_prime(p)) continue;
        for (std::uint64_t q = p; q <= q_max; q *= p) {
            out.emplace_back(static_cast<unsigned long>(q));
            if (q > q_max / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace diomax::search
