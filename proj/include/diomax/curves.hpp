#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "diomax/errors.hpp"
#include "diomax/ff.hpp"

namespace diomax::curves {

using Int = mpz_class;

struct Budget {
    /// Largest q^k enumerated along one axis.
    std::uint64_t max_field = 2'000'000;
    /// Largest base field for the genus-2 search.
    std::uint64_t genus2_max_q = 16;
};

/// y^2 + h(x) y = f(x), coefficients packed in the base field, low-to-high.
/// h empty means h = 0 (odd characteristic only).
struct Hyperelliptic {
    std::vector<ff::elem_t> h;
    std::vector<ff::elem_t> f;
};

/// One monomial c * x^i y^j z^{d-i-j} of a homogeneous trivariate form.
struct PlaneTerm {
    unsigned i = 0, j = 0;
    ff::elem_t c = 0;
};

struct SmoothPlane {
    unsigned degree = 0;
    std::vector<PlaneTerm> terms;
};

/// y^e - y = rhs(x), with points at infinity declared by the caller
/// (the smooth model of the singular plane presentation is not computed).
struct AsTerm {
    unsigned i = 0;
    ff::elem_t c = 0;
};

struct ArtinSchreierLike {
    unsigned lhs_exponent = 0;
    std::vector<AsTerm> rhs;
    std::map<unsigned, Int> infinity; // k -> declared points at infinity
    Int default_infinity = 1;
};

struct CurveModel {
    std::variant<Hyperelliptic, SmoothPlane, ArtinSchreierLike> model;
    unsigned declared_genus = 0;
    std::string name;
};

struct ValidationReport {
    bool ok = true;
    unsigned checked_extensions = 0;
    std::vector<std::string> notes;
};

/// Hyperelliptic: squarefreeness / smooth-model singularity checks.
/// SmoothPlane: homogeneity, genus formula, and an exhaustive scan for
/// common zeros of (F, dF/dx, dF/dy, dF/dz) over F_{q^k} for k up to
/// max_extension (capped so the scan stays within a fixed work limit).
/// Throws not_squarefree / singular_point_found / invalid_model.
ValidationReport validate_model(const CurveModel& M, const ff::Field& F,
                                unsigned max_extension = 6,
                                const Budget& budget = {});

/// Number of points of the smooth model over F_{q^k}, by exhaustive
/// enumeration. Conventions for points at infinity:
///  - hyperelliptic, p odd: with w = f + h^2/4, 1 point if deg w odd,
///    else 1 + chi(leading coeff of w) over F_{q^k};
///  - hyperelliptic, p = 2: with d = max(deg f, 2 deg h) and m = ceil(d/2),
///    1 point if d odd or h_m = 0, else 2 or 0 according to the trace of
///    f_d / h_m^2;
///  - smooth plane: projective zeros, no extra convention needed;
///  - Artin-Schreier-like: caller-declared counts at infinity.
Int count_points(const CurveModel& M, const ff::Field& F, unsigned k,
                 const Budget& budget = {});

/// N_1 .. N_m; throws impossible_counts when m >= 2 and N_1 > N_2.
std::vector<Int> count_profile(const CurveModel& M, const ff::Field& F,
                               unsigned m, const Budget& budget = {});

} // namespace diomax::curves
