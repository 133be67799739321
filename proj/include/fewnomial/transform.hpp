#pragma once

#include <string>
#include <vector>

#include "fewnomial/core.hpp"
#include "fewnomial/linalg.hpp"

namespace fewnomial {

/// Monomial change of variables h_B(x) = (x^{B_1}, ..., x^{B_n}) for a
/// nonsingular B with columns B_j. Acts on exponents by a -> B a and on
/// points by log h_B(x) = B^T log x.
struct ChangeOfVariables {
    Matrix matrix;
    double det_abs = 0.0;
    std::vector<std::string> trail;

    /// Validates nonsingularity (throws Errc::singular_matrix otherwise).
    static ChangeOfVariables from_matrix(Matrix b, std::string step = "");

    ChangeOfVariables inverse() const;
    ChangeOfVariables compose_after(const ChangeOfVariables& first) const;  // this o first = h_{B_first * B_this}

    PositivePoint apply_point(const PositivePoint& x) const;
    LogPoint apply_log(const LogPoint& u) const;
};

/// f o h_B: same coefficients, exponents B a_i, regrouped.
Fewnomial apply_change(const Fewnomial& f, const ChangeOfVariables& b);

/// Substitute x_j := scale_j * x_j (scales positive). Multiplies each
/// coefficient by scale^{a_i}; exponents are unchanged.
Fewnomial rescale_variables(const Fewnomial& f, const Vec& scale);

/// Result of reducing a bivariate 4-nomial to 1 - x1 - x2 + A x1^c x2^d.
struct NormalForm4 {
    double A = 0.0;  // > 0
    double c = 0.0;  // > 1
    double d = 0.0;  // > 1
    ChangeOfVariables transform;   // the inverse-basis monomial change applied
    Vec rescale;                   // per-variable positive scale factors
    Term pivot_constant;           // the monomial divided out of (+-)f
    bool negated = false;          // whether f was multiplied by -1 first

    Fewnomial normal_fewnomial() const;
    /// Point z of the original coordinates corresponding to y in normal-form
    /// coordinates: f vanishes at z exactly when the normal form vanishes at y.
    PositivePoint map_point(const PositivePoint& y) const;
};

/// Constructive reduction: divide out a hull vertex not adjacent to the
/// positive opposite vertex, move the minimal-area vertex triangle onto the
/// unit triangle with an inverse-basis change, then rescale both variables.
NormalForm4 normalize_to_standard_form(const Fewnomial& f);

/// Restriction of a bivariate f to the curve {x in R+^2 : x^u = p^u},
/// parametrized through p. One univariate term per input term, regrouped.
struct CurveRestriction {
    PositivePoint base_point;
    Vec direction;          // u != 0
    Fewnomial restricted;   // univariate

    /// The parametrization h_{(p,u)}(t); passes through p.
    PositivePoint curve_point(double t) const;
};

CurveRestriction restrict_to_curve(const Fewnomial& f, const PositivePoint& p, const Vec& u);

struct AxisBounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct SliceLevel {
    int axis = 0;
    double level = 0.0;
    bool upper = false;
};

/// The 2n hyperplane fixations x_j = M_j and x_j = m_j taken after the
/// inverse-basis change that makes n of the exponents the unit vectors.
/// Each slice is an (n-1)-variate fewnomial with at most m-1 terms; the
/// slice totals majorize the count of non-compact components.
struct SliceFamily {
    ChangeOfVariables basis_change;  // the inverse-basis change that was applied
    std::vector<SliceLevel> levels;
    std::vector<Fewnomial> slices;
    Fewnomial reduced;               // the transformed fewnomial the slices fix
};

SliceFamily slice_reduction(const Fewnomial& f, const std::vector<AxisBounds>& window);

}  // namespace fewnomial
