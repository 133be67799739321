#include "fewnomial/transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fewnomial/newton.hpp"

namespace fewnomial {

namespace {

std::string describe_matrix(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.n; ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace

ChangeOfVariables ChangeOfVariables::from_matrix(Matrix b, std::string step) {
    auto inv = invert(b);
    if (!inv) raise(Errc::singular_matrix, "change of variables requires a nonsingular matrix");
    ChangeOfVariables out;
    out.det_abs = std::fabs(inv->det);
    out.matrix = std::move(b);
    if (step.empty()) step = "apply " + describe_matrix(out.matrix);
    out.trail.push_back(std::move(step));
    return out;
}

ChangeOfVariables ChangeOfVariables::inverse() const {
    auto inv = invert(matrix);
    if (!inv) raise(Errc::singular_matrix, "matrix became singular");
    ChangeOfVariables out;
    out.matrix = std::move(inv->inverse);
    out.det_abs = 1.0 / det_abs;
    out.trail = trail;
    out.trail.push_back("invert " + describe_matrix(matrix));
    return out;
}

ChangeOfVariables ChangeOfVariables::compose_after(const ChangeOfVariables& first) const {
    // Applying `first` then `this` multiplies exponents by B_this * B_first.
    ChangeOfVariables out;
    out.matrix = matrix * first.matrix;
    out.det_abs = det_abs * first.det_abs;
    out.trail = first.trail;
    out.trail.insert(out.trail.end(), trail.begin(), trail.end());
    return out;
}

PositivePoint ChangeOfVariables::apply_point(const PositivePoint& x) const {
    return to_positive(apply_log(to_log(x)));
}

LogPoint ChangeOfVariables::apply_log(const LogPoint& u) const {
    // log h_B(e^u) = B^T u.
    return LogPoint(matrix.apply_transpose(u.coords));
}

Fewnomial apply_change(const Fewnomial& f, const ChangeOfVariables& b) {
    if (b.matrix.n != f.nvars())
        raise(Errc::dimension_mismatch, "matrix size does not match nvars");
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms())
        out.push_back(Term{t.coefficient, b.matrix.apply(t.exponent)});
    return Fewnomial::build(f.nvars(), std::move(out));
}

Fewnomial rescale_variables(const Fewnomial& f, const Vec& scale) {
    if (static_cast<int>(scale.size()) != f.nvars())
        raise(Errc::dimension_mismatch, "scale size does not match nvars");
    for (double s : scale)
        if (!(s > 0.0)) raise(Errc::invalid_argument, "scales must be positive");
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        double log_factor = 0.0;
        for (std::size_t j = 0; j < scale.size(); ++j)
            log_factor += t.exponent[j] * std::log(scale[j]);
        out.push_back(Term{t.coefficient * std::exp(log_factor), t.exponent});
    }
    return Fewnomial::build(f.nvars(), std::move(out));
}

Fewnomial NormalForm4::normal_fewnomial() const {
    std::vector<Term> terms{
        Term{1.0, {0.0, 0.0}},
        Term{-1.0, {1.0, 0.0}},
        Term{-1.0, {0.0, 1.0}},
        Term{A, {c, d}},
    };
    return Fewnomial::build(2, std::move(terms));
}

PositivePoint NormalForm4::map_point(const PositivePoint& y) const {
    PositivePoint scaled(Vec{y.coords[0] * rescale[0], y.coords[1] * rescale[1]});
    return transform.apply_point(scaled);
}

NormalForm4 normalize_to_standard_form(const Fewnomial& f) {
    auto [summary, quad] = hull_and_classify(f);
    if (!quad.equiv_hypotheses_met)
        raise(Errc::prereq_not_met,
              "normal form needs a quadrilateral without parallel opposite sides and "
              "alternating coefficient signs");

    const auto& v = summary.hull_vertices;  // counter-clockwise, size 4
    auto triangle_area = [&](int skip) {
        Vec t[3];
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) t[k++] = v[static_cast<std::size_t>(i)];
        return 0.5 * std::fabs((t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) -
                               (t[1][1] - t[0][1]) * (t[2][0] - t[0][0]));
    };

    double areas[4];
    double area_max = 0.0;
    for (int k = 0; k < 4; ++k) {
        areas[k] = triangle_area(k);
        area_max = std::max(area_max, areas[k]);
    }
    int skip = 0;  // first minimum: the omitted vertex becomes the A monomial
    for (int k = 1; k < 4; ++k)
        if (areas[k] < areas[skip]) skip = k;

    // The minimal triangle must be strictly smaller than the two triangles
    // sharing an edge with it through the origin vertex; the no-parallel-
    // sides hypothesis makes these inequalities strict.
    double area_tol = 1e-10 * area_max;
    if (!(areas[skip] < areas[(skip + 1) % 4] - area_tol) ||
        !(areas[skip] < areas[(skip + 3) % 4] - area_tol))
        raise(Errc::degenerate_minimum,
              "minimal vertex triangle is not strictly smaller than its neighbors");

    // The omitted vertex keeps the A monomial; its opposite becomes the
    // constant 1; the two vertices adjacent to both span the basis.
    const int i1 = (skip + 2) % 4;
    const int i2 = (skip + 3) % 4;
    const int i3 = (skip + 1) % 4;

    const int t1 = summary.hull_term_indices[static_cast<std::size_t>(i1)];
    bool negate = f.term(static_cast<std::size_t>(t1)).coefficient < 0;

    Fewnomial g = f;
    if (negate) {
        std::vector<Term> flipped = f.terms();
        for (Term& t : flipped) t.coefficient = -t.coefficient;
        g = Fewnomial::build(2, std::move(flipped));
    }
    Term pivot = g.term(static_cast<std::size_t>(t1));
    g = monomial_normalize(g, static_cast<std::size_t>(t1));

    const Vec& a1 = v[static_cast<std::size_t>(i1)];
    auto translated = [&](int idx) {
        const Vec& a = v[static_cast<std::size_t>(idx)];
        return Vec{a[0] - a1[0], a[1] - a1[1]};
    };
    Vec b2 = translated(i2), b3 = translated(i3);

    Matrix basis(2);
    basis(0, 0) = b2[0];
    basis(1, 0) = b2[1];
    basis(0, 1) = b3[0];
    basis(1, 1) = b3[1];
    ChangeOfVariables change =
        ChangeOfVariables::from_matrix(basis, "basis " + describe_matrix(basis)).inverse();
    g = apply_change(g, change);

    // g is now 1 + c2 x1 + c3 x2 + c4 x1^cexp x2^dexp with c2, c3 < 0.
    double c2 = 0.0, c3 = 0.0, c4 = 0.0;
    Vec cd{0.0, 0.0};
    for (const Term& t : g.terms()) {
        double e1 = t.exponent[0], e2 = t.exponent[1];
        if (std::fabs(e1) <= kRegroupTol && std::fabs(e2) <= kRegroupTol) continue;
        if (std::fabs(e1 - 1.0) <= kRegroupTol && std::fabs(e2) <= kRegroupTol)
            c2 = t.coefficient;
        else if (std::fabs(e1) <= kRegroupTol && std::fabs(e2 - 1.0) <= kRegroupTol)
            c3 = t.coefficient;
        else {
            c4 = t.coefficient;
            cd = t.exponent;
        }
    }
    if (!(c2 < 0.0) || !(c3 < 0.0) || !(c4 > 0.0))
        raise(Errc::degenerate_minimum, "unexpected sign pattern after basis change");

    Vec scale{1.0 / std::fabs(c2), 1.0 / std::fabs(c3)};
    Fewnomial final_form = rescale_variables(g, scale);

    NormalForm4 out;
    out.c = cd[0];
    out.d = cd[1];
    if (!(out.c > 1.0) || !(out.d > 1.0))
        raise(Errc::degenerate_minimum, "normal-form exponents did not exceed 1");
    for (const Term& t : final_form.terms())
        if (std::fabs(t.exponent[0] - out.c) <= kRegroupTol &&
            std::fabs(t.exponent[1] - out.d) <= kRegroupTol)
            out.A = t.coefficient;
    if (!(out.A > 0.0)) raise(Errc::degenerate_minimum, "normal-form coefficient not positive");
    out.transform = change;
    out.rescale = scale;
    out.pivot_constant = pivot;
    out.negated = negate;
    {
        std::ostringstream os;
        os << (negate ? "negate; " : "") << "divide by " << pivot.coefficient << "*x^("
           << pivot.exponent[0] << "," << pivot.exponent[1] << "); rescale (" << scale[0] << ","
           << scale[1] << ")";
        out.transform.trail.push_back(os.str());
    }
    return out;
}

PositivePoint CurveRestriction::curve_point(double t) const {
    if (!(t > 0.0)) raise(Errc::invalid_argument, "curve parameter must be positive");
    const Vec& u = direction;
    const Vec& p = base_point.coords;
    if (u[1] != 0.0) {
        double log_pu = u[0] * std::log(p[0]) + u[1] * std::log(p[1]);
        double x2 = std::exp(log_pu / u[1] - (u[0] / u[1]) * std::log(t));
        return PositivePoint(Vec{t, x2});
    }
    return PositivePoint(Vec{p[0], t});
}

CurveRestriction restrict_to_curve(const Fewnomial& f, const PositivePoint& p, const Vec& u) {
    if (f.nvars() != 2) raise(Errc::dimension_mismatch, "curve restriction needs two variables");
    if (u.size() != 2) raise(Errc::dimension_mismatch, "direction must have two entries");
    if (u[0] == 0.0 && u[1] == 0.0) raise(Errc::zero_direction, "direction must be nonzero");

    std::vector<Term> out;
    out.reserve(f.terms().size());
    if (u[1] != 0.0) {
        double log_pu = u[0] * std::log(p.coords[0]) + u[1] * std::log(p.coords[1]);
        for (const Term& t : f.terms()) {
            double coeff = t.coefficient * std::exp(log_pu * t.exponent[1] / u[1]);
            double expo = t.exponent[0] - t.exponent[1] * u[0] / u[1];
            out.push_back(Term{coeff, Vec{expo}});
        }
    } else {
        double log_p1 = std::log(p.coords[0]);
        for (const Term& t : f.terms()) {
            double coeff = t.coefficient * std::exp(log_p1 * t.exponent[0]);
            out.push_back(Term{coeff, Vec{t.exponent[1]}});
        }
    }

    CurveRestriction r;
    r.base_point = p;
    r.direction = u;
    r.restricted = Fewnomial::build(1, std::move(out));
    return r;
}

SliceFamily slice_reduction(const Fewnomial& f, const std::vector<AxisBounds>& window) {
    const int n = f.nvars();
    if (n < 2) raise(Errc::invalid_argument, "slice reduction needs at least two variables");
    if (static_cast<int>(window.size()) != n)
        raise(Errc::invalid_argument, "window must give bounds per axis");
    for (const AxisBounds& b : window)
        if (!(0.0 < b.lo) || !(b.lo < b.hi))
            raise(Errc::invalid_argument, "window bounds must satisfy 0 < lo < hi");

    int pivot = f.constant_term_index();
    Fewnomial g = monomial_normalize(f, pivot >= 0 ? static_cast<std::size_t>(pivot) : 0);
    if (newton_dimension(g) != n)
        raise(Errc::not_full_dimensional, "support does not span all variables");

    // Pick n exponent vectors as a basis, one pivot per coordinate, always
    // taking the candidate with the largest remaining entry.
    std::vector<Vec> candidates;
    std::vector<Vec> residuals;
    for (const Term& t : g.terms()) {
        bool zero = true;
        for (double e : t.exponent)
            if (std::fabs(e) > kRegroupTol) zero = false;
        if (zero) continue;
        candidates.push_back(t.exponent);
        residuals.push_back(t.exponent);
    }

    double maxabs = 0.0;
    for (const Vec& c : candidates)
        for (double x : c) maxabs = std::max(maxabs, std::fabs(x));
    const double tol = 1e-10 * maxabs;

    std::vector<char> used(candidates.size(), 0);
    std::vector<int> chosen;
    for (int coord = 0; coord < n; ++coord) {
        int best = -1;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (used[i]) continue;
            if (best < 0 || std::fabs(residuals[i][static_cast<std::size_t>(coord)]) >
                                std::fabs(residuals[static_cast<std::size_t>(best)]
                                                   [static_cast<std::size_t>(coord)]))
                best = static_cast<int>(i);
        }
        if (best < 0 ||
            std::fabs(residuals[static_cast<std::size_t>(best)][static_cast<std::size_t>(coord)]) <= tol)
            raise(Errc::no_basis_found, "no usable pivot for a coordinate");
        used[static_cast<std::size_t>(best)] = 1;
        chosen.push_back(best);
        const Vec& pv = residuals[static_cast<std::size_t>(best)];
        for (std::size_t i = 0; i < residuals.size(); ++i) {
            if (used[i]) continue;
            double factor = residuals[i][static_cast<std::size_t>(coord)] /
                            pv[static_cast<std::size_t>(coord)];
            if (factor == 0.0) continue;
            for (int j = 0; j < n; ++j)
                residuals[i][static_cast<std::size_t>(j)] -= factor * pv[static_cast<std::size_t>(j)];
        }
    }

    Matrix basis(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            basis(i, j) = candidates[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])]
                                    [static_cast<std::size_t>(i)];

    SliceFamily family;
    family.basis_change =
        ChangeOfVariables::from_matrix(basis, "basis " + describe_matrix(basis)).inverse();
    family.reduced = apply_change(g, family.basis_change);

    auto substitute = [&](int axis, double level) {
        std::vector<Term> out;
        out.reserve(family.reduced.terms().size());
        double log_level = std::log(level);
        for (const Term& t : family.reduced.terms()) {
            Term nt;
            nt.coefficient = t.coefficient * std::exp(t.exponent[static_cast<std::size_t>(axis)] * log_level);
            for (int j = 0; j < n; ++j)
                if (j != axis) nt.exponent.push_back(t.exponent[static_cast<std::size_t>(j)]);
            out.push_back(std::move(nt));
        }
        return Fewnomial::build(n - 1, std::move(out));
    };

    for (int j = 0; j < n; ++j) {
        family.levels.push_back(SliceLevel{j, window[static_cast<std::size_t>(j)].hi, true});
        family.slices.push_back(substitute(j, window[static_cast<std::size_t>(j)].hi));
    }
    for (int j = 0; j < n; ++j) {
        family.levels.push_back(SliceLevel{j, window[static_cast<std::size_t>(j)].lo, false});
        family.slices.push_back(substitute(j, window[static_cast<std::size_t>(j)].lo));
    }
    return family;
}

}  // namespace fewnomial
