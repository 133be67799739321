#include "fewnomial/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fewnomial {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::empty_after_regroup: return "EmptyAfterRegroup";
        case Errc::zero_coefficient: return "ZeroCoefficient";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::not_univariate: return "NotUnivariate";
        case Errc::singular_matrix: return "SingularMatrix";
        case Errc::prereq_not_met: return "PrereqNotMet";
        case Errc::degenerate_minimum: return "DegenerateMinimum";
        case Errc::zero_direction: return "ZeroDirection";
        case Errc::not_full_dimensional: return "NotFullDimensional";
        case Errc::no_basis_found: return "NoBasisFound";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::inconsistent_header: return "InconsistentHeader";
        case Errc::unsupported_dimension: return "UnsupportedDimension";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

PositivePoint::PositivePoint(Vec c) : coords(std::move(c)) {
    for (double x : coords)
        if (!(x > 0.0))
            raise(Errc::invalid_argument, "positive point requires strictly positive coordinates");
}

LogPoint to_log(const PositivePoint& x) {
    Vec u(x.coords.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::log(x.coords[i]);
    return LogPoint(std::move(u));
}

PositivePoint to_positive(const LogPoint& u) {
    Vec x(u.coords.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::exp(u.coords[i]);
    return PositivePoint(std::move(x));
}

namespace {

bool exponent_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double inf_distance(const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

}  // namespace

Fewnomial Fewnomial::build(int nvars, std::vector<Term> raw_terms, double regroup_tol) {
    if (nvars < 1) raise(Errc::invalid_argument, "nvars must be positive");
    for (const Term& t : raw_terms) {
        if (static_cast<int>(t.exponent.size()) != nvars) {
            std::ostringstream msg;
            msg << "exponent vector of length " << t.exponent.size() << ", expected " << nvars;
            raise(Errc::length_mismatch, msg.str());
        }
        if (t.coefficient == 0.0)
            raise(Errc::zero_coefficient, "zero coefficients are not allowed");
    }

    std::vector<Term> grouped;
    grouped.reserve(raw_terms.size());
    for (const Term& t : raw_terms) {
        bool merged = false;
        for (Term& g : grouped) {
            if (inf_distance(g.exponent, t.exponent) <= regroup_tol) {
                g.coefficient += t.coefficient;
                merged = true;
                break;
            }
        }
        if (!merged) grouped.push_back(t);
    }
    grouped.erase(std::remove_if(grouped.begin(), grouped.end(),
                                 [](const Term& t) { return t.coefficient == 0.0; }),
                  grouped.end());
    if (grouped.empty())
        raise(Errc::empty_after_regroup, "all terms cancelled during regrouping");

    std::sort(grouped.begin(), grouped.end(),
              [](const Term& a, const Term& b) { return exponent_less(a.exponent, b.exponent); });
    return Fewnomial(nvars, std::move(grouped));
}

int Fewnomial::constant_term_index(double tol) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        bool zero = true;
        for (double e : terms_[i].exponent)
            if (std::fabs(e) > tol) {
                zero = false;
                break;
            }
        if (zero) return static_cast<int>(i);
    }
    return -1;
}

namespace {

void check_dims(const Fewnomial& f, std::size_t point_dim) {
    if (static_cast<std::size_t>(f.nvars()) != point_dim)
        raise(Errc::dimension_mismatch, "point dimension does not match nvars");
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Sums small value sets in increasing order of magnitude.
double ordered_sum(std::vector<double>& vals) {
    std::stable_sort(vals.begin(), vals.end(),
                     [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    double s = 0.0;
    for (double v : vals) s += v;
    return s;
}

constexpr double kExpGuard = 700.0;  // exp stays finite below this

}  // namespace

double evaluate_log(const Fewnomial& f, const LogPoint& u) {
    check_dims(f, u.coords.size());
    const auto& terms = f.terms();
    const std::size_t m = terms.size();

    std::vector<double> dots(m), logs(m);
    double log_max = -std::numeric_limits<double>::infinity();
    double dot_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        dots[i] = dot(terms[i].exponent, u.coords);
        logs[i] = std::log(std::fabs(terms[i].coefficient)) + dots[i];
        log_max = std::max(log_max, logs[i]);
        dot_max = std::max(dot_max, std::fabs(dots[i]));
    }

    std::vector<double> vals(m);
    if (dot_max <= kExpGuard && log_max <= kExpGuard) {
        for (std::size_t i = 0; i < m; ++i) vals[i] = terms[i].coefficient * std::exp(dots[i]);
        return ordered_sum(vals);
    }

    // Scaled path: factor out the largest term magnitude so the partial sum
    // stays representable; the sign survives even if the value overflows.
    for (std::size_t i = 0; i < m; ++i) {
        double t = std::exp(logs[i] - log_max);
        vals[i] = terms[i].coefficient > 0 ? t : -t;
    }
    double scaled = ordered_sum(vals);
    if (scaled == 0.0) return 0.0;
    if (log_max > kExpGuard)
        return scaled > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    return scaled * std::exp(log_max);
}

double evaluate(const Fewnomial& f, const PositivePoint& x) {
    check_dims(f, x.coords.size());
    return evaluate_log(f, to_log(x));
}

Vec gradient_log(const Fewnomial& f, const LogPoint& u) {
    check_dims(f, u.coords.size());
    const auto& terms = f.terms();
    const int n = f.nvars();

    double log_max = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        logs[i] = std::log(std::fabs(terms[i].coefficient)) + dot(terms[i].exponent, u.coords);
        log_max = std::max(log_max, logs[i]);
    }
    // Magnitudes saturate at exp(kExpGuard) scale; direction is preserved.
    double scale = std::exp(std::min(log_max, kExpGuard));
    Vec g(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double t = std::exp(logs[i] - log_max) * scale;
        if (terms[i].coefficient < 0) t = -t;
        for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(j)] += terms[i].exponent[j] * t;
    }
    return g;
}

Vec hessian_log(const Fewnomial& f, const LogPoint& u) {
    check_dims(f, u.coords.size());
    const auto& terms = f.terms();
    const int n = f.nvars();

    double log_max = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        logs[i] = std::log(std::fabs(terms[i].coefficient)) + dot(terms[i].exponent, u.coords);
        log_max = std::max(log_max, logs[i]);
    }
    double scale = std::exp(std::min(log_max, kExpGuard));
    Vec h(static_cast<std::size_t>(n) * n, 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double t = std::exp(logs[i] - log_max) * scale;
        if (terms[i].coefficient < 0) t = -t;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                h[static_cast<std::size_t>(j) * n + k] +=
                    terms[i].exponent[j] * terms[i].exponent[k] * t;
    }
    return h;
}

double relative_residual(const Fewnomial& f, const LogPoint& u) {
    check_dims(f, u.coords.size());
    const auto& terms = f.terms();
    double log_max = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        logs[i] = std::log(std::fabs(terms[i].coefficient)) + dot(terms[i].exponent, u.coords);
        log_max = std::max(log_max, logs[i]);
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        double t = std::exp(logs[i] - log_max);
        den += t;
        num += terms[i].coefficient > 0 ? t : -t;
    }
    return std::fabs(num) / den;
}

int sign_at(const Fewnomial& f, const LogPoint& u) {
    double v = evaluate_log(f, u);
    return (v > 0.0) - (v < 0.0);
}

Fewnomial monomial_normalize(const Fewnomial& f, std::size_t pivot) {
    if (pivot >= f.terms().size()) raise(Errc::invalid_argument, "pivot index out of range");
    const Term& p = f.term(pivot);
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Term nt;
        nt.coefficient = t.coefficient / p.coefficient;
        nt.exponent.resize(t.exponent.size());
        for (std::size_t j = 0; j < t.exponent.size(); ++j)
            nt.exponent[j] = t.exponent[j] - p.exponent[j];
        out.push_back(std::move(nt));
    }
    return Fewnomial::build(f.nvars(), std::move(out));
}

int sign_changes(const Fewnomial& f) {
    if (f.nvars() != 1) raise(Errc::not_univariate, "sign_changes needs a univariate fewnomial");
    // Canonical order is increasing exponent for one variable.
    int changes = 0;
    const auto& terms = f.terms();
    for (std::size_t i = 1; i < terms.size(); ++i)
        if ((terms[i - 1].coefficient > 0) != (terms[i].coefficient > 0)) ++changes;
    return changes;
}

}  // namespace fewnomial
