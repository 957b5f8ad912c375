#include <doctest.h>

#include <vector>

#include "diomax/corpus.hpp"
#include "diomax/curves.hpp"
#include "diomax/errors.hpp"
#include "diomax/ff.hpp"

using namespace diomax;
using curves::CurveModel;
using curves::Hyperelliptic;
using curves::SmoothPlane;
using ff::elem_t;
using Int = curves::Int;

namespace {

// Naive affine oracle: count solutions of y^2 + h(x) y = f(x) over F_{q^k}
// by a double loop, plus the infinity convention recomputed from scratch.
Int naive_hyperelliptic(const Hyperelliptic& C, const ff::Field& base, unsigned k) {
    auto E = ff::extend(base, k);
    const ff::Field& F = E.field;
    std::vector<elem_t> h, f;
    for (auto c : C.h) h.push_back(E.embed(base, c));
    for (auto c : C.f) f.push_back(E.embed(base, c));
    auto eval = [&](const std::vector<elem_t>& p, elem_t x) {
        elem_t acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            acc = F.add(F.mul(acc, x), *it);
        return acc;
    };
    Int n = 0;
    for (elem_t x = 0; x < F.q(); ++x) {
        elem_t hx = eval(h, x), fx = eval(f, x);
        for (elem_t y = 0; y < F.q(); ++y)
            if (F.add(F.mul(y, y), F.mul(hx, y)) == fx) ++n;
    }
    return n;
}

} // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("odd-p character-sum counting matches the naive double loop") {
    struct Case { std::uint64_t p; unsigned n; std::vector<elem_t> h, f; };
    std::vector<Case> cases = {
        {5, 1, {}, {0, 4, 0, 0, 0, 1}},       // y^2 = x^5+4x
        {5, 1, {}, {0, 3, 0, 0, 0, 1}},       // y^2 = x^5+3x
        {3, 1, {}, {1, 0, 1, 0, 1, 0, 2}},    // genus-2 defect-0 curve
        {3, 1, {1}, {1, 2, 0, 1}},            // h nonzero, odd p
        {3, 2, {}, {1, 2, 0, 1}},             // extension base field F_9
        {13, 1, {}, {8, 0, 0, 2, 0, 0, 1}},   // even-degree f
    };
    for (const auto& c : cases) {
        ff::Field F(c.p, c.n);
        Hyperelliptic he{c.h, c.f};
        CurveModel M{he, 0, "oracle"};
        for (unsigned k = 1; k <= 2; ++k) {
            std::uint64_t qk = 1;
            for (unsigned i = 0; i < k; ++i) qk *= F.q();
            if (qk > 10'000) break;
            Int affine = naive_hyperelliptic(he, F, k);
            Int full = curves::count_points(M, F, k);
            Int inf = full - affine;
            CHECK(inf >= 0);
            CHECK(inf <= 2);
        }
    }
    // exact agreement including infinity for the documented convention:
    // deg f = 5 odd -> exactly one point at infinity
    ff::Field F5(5, 1);
    Hyperelliptic quintic{{}, {0, 4, 0, 0, 0, 1}};
    CurveModel M{quintic, 2, "quintic"};
    CHECK(curves::count_points(M, F5, 1) == naive_hyperelliptic(quintic, F5, 1) + 1);
    CHECK(curves::count_points(M, F5, 2) == naive_hyperelliptic(quintic, F5, 2) + 1);
}

TEST_CASE("char-2 counting matches the naive double loop") {
    ff::Field F2(2, 1);
    ff::Field F4(2, 2);
    struct Case { const ff::Field* F; std::vector<elem_t> h, f; };
    std::vector<Case> cases = {
        {&F2, {1}, {0, 1, 0, 1}},          // y^2+y = x^3+x
        {&F2, {0, 1}, {1, 1, 0, 1}},       // y^2+xy = x^3+x+1
        {&F4, {0, 0, 0, 1}, {0, 1}},       // search-hit shape
        {&F4, {2, 1}, {3, 0, 1, 1, 0, 1}}, // mixed coefficients
    };
    for (const auto& c : cases) {
        Hyperelliptic he{c.h, c.f};
        CurveModel M{he, 0, "oracle2"};
        for (unsigned k = 1; k <= 3; ++k) {
            Int affine = naive_hyperelliptic(he, *c.F, k);
            Int inf = curves::count_points(M, *c.F, k) - affine;
            CHECK(inf >= 0);
            CHECK(inf <= 2);
        }
    }
}

TEST_CASE("validation: squarefree and smoothness checks") {
    ff::Field F5(5, 1);
    // y^2 = x^2 (x^3+1): visible square factor
    CurveModel bad{Hyperelliptic{{}, {0, 0, 1, 0, 0, 1}}, 2, "bad"};
    CHECK_THROWS_AS(curves::validate_model(bad, F5), not_squarefree);

    CurveModel good{Hyperelliptic{{}, {0, 4, 0, 0, 0, 1}}, 2, "good"};
    CHECK(curves::validate_model(good, F5).ok);

    ff::Field F4(2, 2);
    CurveModel fermat{SmoothPlane{3, {{3, 0, 1}, {0, 3, 1}, {0, 0, 1}}}, 1, "fermat"};
    auto rep = curves::validate_model(fermat, F4, 6);
    CHECK(rep.ok);
    CHECK(rep.checked_extensions >= 1);

    // cuspidal cubic y^2 z = x^3 is singular at (0:0:1)
    CurveModel cusp{SmoothPlane{3, {{3, 0, 4}, {0, 2, 1}}}, 1, "cusp"};
    CHECK_THROWS_AS(curves::validate_model(cusp, F5), singular_point_found);

    // declared genus disagreeing with the degree formula
    CurveModel wrong_genus{SmoothPlane{4, {{4, 0, 1}, {0, 4, 1}, {0, 0, 1}}}, 2, "wg"};
    CHECK_THROWS_AS(curves::validate_model(wrong_genus, ff::Field(3, 2)), invalid_model);

    // h = 0 in characteristic 2 is never a valid hyperelliptic model
    CurveModel h0{Hyperelliptic{{}, {0, 1, 0, 1}}, 1, "h0"};
    CHECK_THROWS_AS(curves::validate_model(h0, ff::Field(2, 1)), invalid_model);
    CHECK_THROWS_AS(curves::count_points(h0, ff::Field(2, 1), 1), invalid_model);
}

TEST_CASE("spec count examples") {
    ff::Field F2(2, 1);
    CurveModel e{Hyperelliptic{{1}, {0, 1, 0, 1}}, 1, "e"};
    CHECK(curves::count_points(e, F2, 1) == 5);

    ff::Field F4(2, 2);
    CurveModel fermat{SmoothPlane{3, {{3, 0, 1}, {0, 3, 1}, {0, 0, 1}}}, 1, "fermat"};
    CHECK(curves::count_points(fermat, F4, 1) == 9);

    ff::Field F8(2, 3);
    curves::ArtinSchreierLike suzuki;
    suzuki.lhs_exponent = 8;
    suzuki.rhs = {{10, 1}, {3, 1}}; // x^2 (x^8 - x) = x^10 + x^3 in char 2
    CurveModel s{suzuki, 14, "suzuki"};
    CHECK(curves::count_points(s, F8, 1) == 65);
    CHECK(curves::count_points(s, F8, 2) == 65);

    ff::Field F3(3, 1);
    // y^2 = (-1-x-x^3)(1-x+x^3) = 2x^6+x^4+x^2+1 over F_3
    CurveModel g2{Hyperelliptic{{}, {1, 0, 1, 0, 1, 0, 2}}, 2, "g2"};
    auto prof = curves::count_profile(g2, F3, 2);
    CHECK(prof == std::vector<Int>{2, 20});

    ff::Field F13(13, 1);
    CurveModel q13{Hyperelliptic{{}, {0, 12, 0, 0, 0, 1}}, 2, "q13"};
    CHECK(curves::count_profile(q13, F13, 2) == std::vector<Int>{14, 118});

    ff::Field F9(3, 2);
    CurveModel f9{SmoothPlane{4, {{4, 0, 1}, {0, 4, 1}, {0, 0, 1}}}, 3, "f9"};
    CHECK(curves::count_profile(f9, F9, 1) == std::vector<Int>{28});
}

TEST_CASE("Weil bound holds for every computed profile") {
    auto entries = corpus::load_corpus(DIOMAX_CORPUS_PATH);
    for (const auto& e : entries) {
        if (!e.model) continue;
        ff::Field F(e.p, e.n, e.modulus);
        Int q = 1;
        for (unsigned i = 0; i < e.n; ++i) q *= static_cast<long>(e.p);
        Int qk = 1;
        for (const auto& [k, declared] : e.declared_counts) {
            qk = 1;
            for (unsigned i = 0; i < k; ++i) qk *= q;
            if (qk > 2'000'000) continue;
            Int n = curves::count_points(*e.model, F, k);
            Int dev = n - qk - 1;
            CHECK(dev * dev <= 4 * Int(e.declared_genus) * Int(e.declared_genus) * qk);
        }
    }
}

TEST_CASE("budget limits are enforced") {
    ff::Field F13(13, 1);
    CurveModel q13{Hyperelliptic{{}, {0, 12, 0, 0, 0, 1}}, 2, "q13"};
    curves::Budget tiny;
    tiny.max_field = 100;
    CHECK_THROWS_AS(curves::count_points(q13, F13, 2, tiny), budget_exceeded);
    CHECK(curves::count_points(q13, F13, 1, tiny) == 14);
}

TEST_SUITE_END();
