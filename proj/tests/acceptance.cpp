// Acceptance gate: one criterion per invocation, selected by argv[1] in 1..6.
// Prints "CRITERION k: PASS" or "CRITERION k: FAIL" plus one line per failed
// sub-check, and exits 0/1 accordingly.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diomax/bounds.hpp"
#include "diomax/classify.hpp"
#include "diomax/corpus.hpp"
#include "diomax/curves.hpp"
#include "diomax/errors.hpp"
#include "diomax/search.hpp"
#include "diomax/zeta.hpp"

using namespace diomax;
using poly::Int;
using poly::IntPoly;
using poly::Rat;

namespace {

struct Gate {
    int failures = 0;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        ++failures;
        std::cout << "  FAIL: " << what << "\n";
    }
    void note(const std::string& what) { std::cout << "  note: " << what << "\n"; }
};

std::vector<corpus::Entry> load() {
    return corpus::load_corpus(DIOMAX_CORPUS_PATH);
}

const corpus::Entry& by_name(const std::vector<corpus::Entry>& es,
                             const std::string& name) {
    for (const auto& e : es)
        if (e.name == name) return e;
    std::cout << "  FAIL: corpus entry missing: " << name << "\n";
    std::exit(1);
}

std::string couple_str(unsigned g, const Int& q) {
    std::ostringstream os;
    os << "(" << g << "," << q << ")";
    return os.str();
}

// ---------------------------------------------------------------- criterion 1

void criterion1(Gate& gate) {
    auto es = load();
    struct Row {
        const char* name;
        long want;     // N_1 = N_2
        bool recover_l; // also recover the full L-polynomial from counts
    };
    const Row rows[] = {
        {"f2-g1-supersingular", 5, true}, {"f3-g1-maximal", 7, true},
        {"f4-fermat-cubic", 9, true},     {"f4-quartic-1", 14, true},
        {"f4-quartic-2", 14, true},       {"f9-fermat-quartic", 28, false},
        {"f16-fermat-quintic", 65, false},{"f25-fermat-sextic", 126, false},
        {"f8-suzuki", 65, false},
    };
    for (const auto& r : rows) {
        const auto& e = by_name(es, r.name);
        ff::Field F(e.p, e.n, e.modulus);
        const auto& M = *e.model;
        Int n1 = curves::count_points(M, F, 1);
        Int n2 = curves::count_points(M, F, 2);
        gate.check(n1 == r.want, std::string(r.name) + ": N_1 recomputed as " +
                                     n1.get_str() + ", want " + std::to_string(r.want));
        gate.check(n2 == r.want, std::string(r.name) + ": N_2 recomputed as " +
                                     n2.get_str() + ", want " + std::to_string(r.want));
        auto v = classify::classify_counts(F.q(), e.declared_genus, n1, n2);
        gate.check(v.is_ihara_max, std::string(r.name) + ": not Ihara-maximal");
        if (r.recover_l) {
            auto counts = curves::count_profile(M, F, e.declared_genus);
            auto L = zeta::lpoly_from_counts(F.q(), e.declared_genus, counts);
            gate.check(e.declared_lpoly && L.L == *e.declared_lpoly,
                       std::string(r.name) + ": recovered L-polynomial mismatch");
        }
    }
}

// ---------------------------------------------------------------- criterion 2

void criterion2(Gate& gate) {
    auto d = [](long q, unsigned g, long n1, long n2) {
        return bounds::dm_defect(Int(q), g, Int(n1), Int(n2)).delta;
    };
    gate.check(d(3, 2, 2, 20) == 0, "defect(3,2,2,20) != 0");
    gate.check(d(49, 2, 36, 2500) == 0, "defect(49,2,36,2500) != 0");
    gate.check(d(5, 2, 6, 6) == 80, "defect(5,2,6,6) != 4qg^2 = 80");
    gate.check(d(13, 2, 14, 118) == 208, "defect(13,2,14,118) != 4qg^2 = 208");

    auto pb = bounds::dm_lower_N2(Int(49), 3, Int(36));
    gate.check(!pb.even_case, "dm_lower_N2(49,3,36) not flagged as odd-genus case");
    gate.check(pb.value == Rat(2108), "dm_lower_N2(49,3,36) != 2108");
    // odd-genus term -2q(g - 2/g) = -686/3, as an exact rational identity
    Rat term = Rat(-686, 3);
    term.canonicalize();
    Rat t(36 - 49 - 1); // N_1 - q - 1 = -14
    Rat expected = Rat(49 * 49 + 1) + term - t * t / Rat(3);
    gate.check(pb.value == expected,
               "dm_lower_N2(49,3,36) does not match q^2+1 - 686/3 - (N_1-q-1)^2/3");
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Gate& gate) {
    struct FieldSpec {
        std::uint64_t p;
        unsigned n;
    };
    const FieldSpec fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    for (const auto& fs : fields) {
        ff::Field F(fs.p, fs.n);
        std::size_t cap = (F.q() == 2) ? SIZE_MAX : 500000;
        auto hits = search::genus2_dm_search(F, {}, cap);
        std::string qs = std::to_string(F.q());
        if (F.q() == 2) {
            gate.check(hits.empty(), "F_2 search returned " +
                                         std::to_string(hits.size()) + " hits, want 0");
            continue;
        }
        gate.check(!hits.empty(), "F_" + qs + " search returned no hits");
        if (F.q() == 3) {
            bool found = false;
            for (const auto& h : hits)
                if (h.N1 == 2 && h.N2 == 20) found = true;
            gate.check(found, "F_3 hit set has no model with counts (2,20)");
        }
        for (const auto& h : hits)
            if (h.delta != 0) {
                gate.check(false, "F_" + qs + " hit with nonzero defect: " + h.model_str);
                break;
            }
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Gate& gate) {
    auto v = search::ihara_candidate_scan(18, search::prime_powers_upto(49));

    std::map<std::pair<unsigned, long>, long> confirmed = {
        {{1, 2}, 5},   {{1, 3}, 7},   {{1, 4}, 9},    {{3, 4}, 14},  {{3, 9}, 28},
        {{6, 16}, 65}, {{7, 7}, 36},  {{10, 25}, 126}, {{14, 8}, 65},
    };
    std::map<std::pair<unsigned, long>, long> discarded = {
        {{4, 8}, 29},   {{6, 9}, 40},   {{8, 11}, 56},  {{8, 19}, 88},
        {{10, 5}, 36},  {{10, 16}, 87}, {{15, 25}, 161}, {{16, 4}, 45},
        {{16, 13}, 102}, {{18, 29}, 204}, {{18, 41}, 270},
    };

    std::set<std::pair<unsigned, long>> found;
    for (const auto& c : v) {
        auto key = std::make_pair(c.g, long(c.q.get_si()));
        found.insert(key);

        auto ci = confirmed.find(key);
        auto di = discarded.find(key);
        if (ci != confirmed.end()) {
            gate.check(c.N_star == ci->second,
                       couple_str(c.g, c.q) + ": N* = " + c.N_star.get_str() +
                           ", published " + std::to_string(ci->second));
            gate.check(c.status == "confirmed-curve",
                       couple_str(c.g, c.q) + ": status " + c.status);
        } else if (di != discarded.end()) {
            if (key == std::make_pair(8u, 11L)) {
                gate.note("(8,11): scan gives N* = " + c.N_star.get_str() +
                          "; the published table prints this couple twice, with "
                          "bounds 56 and 29 — reported, not asserted");
            } else {
                gate.check(c.N_star == di->second,
                           couple_str(c.g, c.q) + ": N* = " + c.N_star.get_str() +
                               ", published " + std::to_string(di->second));
            }
            gate.check(c.status == "discarded-by-bound",
                       couple_str(c.g, c.q) + ": status " + c.status);
        }
    }

    // "exactly the union": both inclusions, checked couple by couple.
    for (const auto& [key, nstar] : confirmed)
        gate.check(found.count(key) == 1,
                   "confirmed couple missing from scan: " +
                       couple_str(key.first, Int(key.second)));
    for (const auto& [key, nstar] : discarded)
        gate.check(found.count(key) == 1,
                   "discarded couple missing from scan: " +
                       couple_str(key.first, Int(key.second)));
    for (const auto& key : found) {
        bool published = confirmed.count(key) || discarded.count(key);
        gate.check(published, "scan emits couple " +
                                  couple_str(key.first, Int(key.second)) +
                                  " absent from both published tables");
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion5(Gate& gate) {
    auto has_case = [](const classify::Genus2JacobianClass& c, const char* label) {
        return std::find(c.matched_cases.begin(), c.matched_cases.end(), label) !=
               c.matched_cases.end();
    };
    gate.check(has_case(classify::genus2_jacobian_classify(7, 2, Int(7)), "1.2"),
               "(7,2,+7) does not match case 1.2");
    gate.check(has_case(classify::genus2_jacobian_classify(7, 2, Int(-7)), "1.2"),
               "(7,2,-7) does not match case 1.2");
    gate.check(has_case(classify::genus2_jacobian_classify(5, 1, Int(2)), "2"),
               "(5,1,2) does not match case 2");
    gate.check(has_case(classify::genus2_jacobian_classify(2, 2, Int(0)), "3.1.iii"),
               "(2,2,0) does not match case 3.1.iii");
    for (long a = -2; a <= 2; ++a)
        gate.check(!classify::genus2_jacobian_classify(2, 1, Int(a)).verdict,
                   "(2,1," + std::to_string(a) + ") unexpectedly matched");

    // Soundness: every equal-alpha genus-2 curve found by the search has a
    // Jacobian the decision procedure accepts.
    struct FieldSpec {
        std::uint64_t p;
        unsigned n;
    };
    const FieldSpec fields[] = {{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    for (const auto& fs : fields) {
        ff::Field F(fs.p, fs.n);
        auto hits = search::genus2_dm_search(F);
        for (const auto& h : hits) {
            Int a = Int(-h.two_alpha);
            if (!classify::genus2_jacobian_classify(fs.p, fs.n, a).verdict) {
                gate.check(false, "F_" + std::to_string(F.q()) + " hit " + h.model_str +
                                      " with a = " + a.get_str() +
                                      " rejected by the decision procedure");
                break;
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 6

// Floating-point oracle: all complex roots have |z| = sqrt(q), via the
// companion matrix of the squarefree part (multiple eigenvalues of a
// companion matrix are only accurate to eps^(1/multiplicity)).
bool weil_oracle(const IntPoly& f_in, long q, double tol = 1e-6) {
    IntPoly f = poly::squarefree_part(f_in);
    int d = f.degree();
    if (d <= 0) return false;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    double lead = f.coeff(unsigned(d)).get_d();
    for (int i = 0; i < d; ++i) {
        C(i, d - 1) = -f.coeff(unsigned(i)).get_d() / lead;
        if (i + 1 < d) C(i + 1, i) = 1.0;
    }
    Eigen::VectorXcd ev = C.eigenvalues();
    double r = std::sqrt(double(q));
    for (int i = 0; i < d; ++i)
        if (std::abs(std::abs(ev(i)) - r) > tol * r) return false;
    return true;
}

IntPoly ip(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

void criterion6(Gate& gate) {
    std::mt19937 rng(20260826);

    // (a) exact tester vs floating oracle on 500 random polynomials of
    // degree <= 8 satisfying the functional equation (1/3 genuine products
    // of Weil quadratics, 2/3 arbitrary).
    {
        int disagreements = 0;
        const long qs[] = {2, 3, 4, 5, 7, 9};
        for (int trial = 0; trial < 500; ++trial) {
            long q = qs[rng() % 6];
            unsigned g = 1 + rng() % 4;
            IntPoly f;
            if (trial % 3 == 0) {
                long bmax = long(std::floor(2 * std::sqrt(double(q))));
                f = ip({1});
                for (unsigned j = 0; j < g; ++j) {
                    long b = long(rng() % (2 * bmax + 1)) - bmax;
                    f = f * ip({q, b, 1});
                }
            } else {
                // random monic with the functional equation forced
                std::vector<Int> c(2 * g + 1);
                c[2 * g] = 1;
                long span = 3 * (q + 1);
                for (unsigned i = g; i < 2 * g; ++i)
                    c[i] = long(rng() % (2 * span + 1)) - span;
                Int qq(q);
                for (unsigned i = 0; i < g; ++i) {
                    Int w;
                    mpz_pow_ui(w.get_mpz_t(), qq.get_mpz_t(), g - i);
                    c[i] = w * c[2 * g - i];
                }
                f = IntPoly(std::move(c));
            }
            bool exact = poly::is_q_weil(f, Int(q)).weil;
            bool approx = weil_oracle(f, q);
            if (exact != approx) {
                ++disagreements;
                gate.check(false, "oracle disagreement at q=" + std::to_string(q) +
                                      " on " + f.to_string());
            }
        }
        gate.check(disagreements == 0, "q-Weil tester / oracle agreement below 100%");
    }

    // (b) defect interval and odd-genus refinement on the exhaustive count
    // grid q <= 16, g <= 6, expressed through the derived N_2 window.
    {
        const long qs[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
        bool all_ok = true;
        for (long q : qs) {
            for (unsigned g = 2; g <= 6; ++g) {
                auto [lo1, hi1] = bounds::weil_interval(Int(q), g);
                for (long n1 = std::max(lo1.get_si(), 0L); n1 <= hi1.get_si(); ++n1) {
                    Rat up = bounds::dm_upper_N2(Int(q), g, Int(n1));
                    auto lo = bounds::dm_lower_N2(Int(q), g, Int(n1));
                    long base = q * q + 1 - 2 * long(g) * q - 4;
                    long top = q * q + 1 + 2 * long(g) * q + 4;
                    for (long n2 = std::max(base, n1); n2 <= top; ++n2) {
                        auto d = bounds::dm_defect(Int(q), g, Int(n1), Int(n2));
                        Rat rn2(n2);
                        bool window = (g % 2 == 0)
                                          ? (lo.value <= rn2 && rn2 <= up)
                                          : (d.delta >= 0 && d.delta <= 4 * q * long(g) * long(g));
                        if (g % 2 == 0 && d.in_range != window) all_ok = false;
                        if (d.delta == 0 && rn2 != up) all_ok = false;
                        if (rn2 == up && d.delta != 0) all_ok = false;
                        if (g % 2 == 1) {
                            bool refined = d.delta >= 0 &&
                                           d.delta <= 4 * q * (long(g) * long(g) - 1);
                            bool in_window = lo.value <= rn2 && rn2 <= up;
                            if (refined != in_window) all_ok = false;
                        }
                    }
                }
            }
        }
        gate.check(all_ok, "defect interval / N_2 window consistency failed on grid");
    }

    // (c) DM <=> zero alpha-variance <=> AHL attainment, on corpus curves and
    // genus-2 search hits.
    {
        auto es = load();
        for (const auto& e : es) {
            if (!e.declared_lpoly) continue;
            ff::Field F(e.p, e.n, e.modulus);
            unsigned g = e.declared_genus;
            zeta::LPolynomial L{*e.declared_lpoly, F.q(), g};
            Int n1 = poly::lpoly_to_counts(L.L, F.q(), 1);
            Int n2 = poly::lpoly_to_counts(L.L, F.q(), 2);
            auto verdict = classify::classify_counts(F.q(), g, n1, n2);
            auto stats = zeta::alpha_stats(F.q(), g, n1, n2);
            bool ahl_attained =
                Rat(zeta::jacobian_order(L)) ==
                bounds::ahl_bound(F.q(), g, zeta::trace_tau(L));
            gate.check(verdict.is_dm == (stats.variance == 0),
                       e.name + ": DM flag vs zero variance");
            gate.check(verdict.is_dm == ahl_attained,
                       e.name + ": DM flag vs AHL attainment");
        }
        for (long q : {3L, 4L, 5L}) {
            ff::Field F(q == 4 ? 2 : q, q == 4 ? 2u : 1u);
            for (const auto& h : search::genus2_dm_search(F)) {
                auto L = classify::dm_lpoly(F.q(), 2, h.N1);
                auto stats = zeta::alpha_stats(F.q(), 2, h.N1, h.N2);
                bool ahl_attained =
                    Rat(zeta::jacobian_order(L)) ==
                    bounds::ahl_bound(F.q(), 2, zeta::trace_tau(L));
                gate.check(stats.variance == 0 && ahl_attained,
                           "F_" + std::to_string(F.q()) + " hit " + h.model_str +
                               ": variance / AHL attainment");
            }
        }
    }

    // (d) covering consistency on constructed L-pairs.
    {
        zeta::LPolynomial LY{ip({1, -1, 3}).pow(2), Int(3), 2};
        gate.check(classify::check_covering_consistency({ip({1, -1, 3}), Int(3), 1}, LY),
                   "DM square: true quadratic factor rejected");
        gate.check(!classify::check_covering_consistency({ip({1, 1, 3}), Int(3), 1}, LY),
                   "DM square: wrong quadratic factor accepted");
        zeta::LPolynomial LY2{ip({1, 2, 2}) * ip({1, 1, 2}), Int(2), 2};
        gate.check(classify::check_covering_consistency({ip({1, 2, 2}), Int(2), 1}, LY2),
                   "plain divisibility case rejected");
    }

    // (e) Newton round-trip on 200 random Weil L-polynomials.
    {
        bool all_ok = true;
        const long qs[] = {2, 3, 4, 5, 7, 9};
        for (int trial = 0; trial < 200; ++trial) {
            long q = qs[rng() % 6];
            unsigned g = 1 + rng() % 5;
            long bmax = long(std::floor(2 * std::sqrt(double(q))));
            IntPoly L = ip({1});
            for (unsigned j = 0; j < g; ++j) {
                long b = long(rng() % (2 * bmax + 1)) - bmax;
                L = L * ip({1, b, q});
            }
            std::vector<Int> counts;
            for (unsigned k = 1; k <= g; ++k)
                counts.push_back(poly::lpoly_to_counts(L, Int(q), k));
            auto back = zeta::lpoly_from_counts(Int(q), g, counts);
            if (back.L != L) all_ok = false;
        }
        gate.check(all_ok, "Newton identity round-trip failed");
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: diomax-acceptance <criterion 1-6>\n";
        return 2;
    }
    int k = std::atoi(argv[1]);
    Gate gate;
    try {
        switch (k) {
            case 1: criterion1(gate); break;
            case 2: criterion2(gate); break;
            case 3: criterion3(gate); break;
            case 4: criterion4(gate); break;
            case 5: criterion5(gate); break;
            case 6: criterion6(gate); break;
            default:
                std::cerr << "usage: diomax-acceptance <criterion 1-6>\n";
                return 2;
        }
    } catch (const std::exception& ex) {
        gate.check(false, std::string("unexpected exception: ") + ex.what());
    }
    std::cout << "CRITERION " << k << ": " << (gate.failures == 0 ? "PASS" : "FAIL")
              << "\n";
    return gate.failures == 0 ? 0 : 1;
}
