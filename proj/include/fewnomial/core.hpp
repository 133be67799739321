#pragma once

#include <cstddef>
#include <vector>

#include "fewnomial/errors.hpp"

namespace fewnomial {

using Vec = std::vector<double>;

/// One monomial c * x^a with a real coefficient and a real exponent vector.
struct Term {
    double coefficient = 0.0;
    Vec exponent;
};

/// A point of the open positive orthant.
struct PositivePoint {
    Vec coords;

    PositivePoint() = default;
    explicit PositivePoint(Vec c);
};

/// Componentwise natural log of a positive point; any real vector is valid.
struct LogPoint {
    Vec coords;

    LogPoint() = default;
    explicit LogPoint(Vec c) : coords(std::move(c)) {}
};

LogPoint to_log(const PositivePoint& x);
PositivePoint to_positive(const LogPoint& u);

/// Two exponent vectors are regrouped into one term when their infinity
/// distance is at most this. Real exponents come out of matrix inverses, so
/// exact comparison is not usable as the default.
inline constexpr double kRegroupTol = 1e-9;

/// Sum of finitely many monomials with nonzero real coefficients and real
/// exponent vectors, as a function on the open positive orthant. Immutable
/// after construction; terms are kept in lexicographic exponent order.
class Fewnomial {
public:
    /// Empty value, only useful as a placeholder before assignment.
    Fewnomial() = default;

    /// Regroups terms whose exponents agree within `regroup_tol`, drops
    /// coefficients that cancel to zero, and sorts canonically.
    static Fewnomial build(int nvars, std::vector<Term> raw_terms,
                           double regroup_tol = kRegroupTol);

    int nvars() const { return nvars_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& term(std::size_t i) const { return terms_.at(i); }

    /// Index of the term whose exponent vector is zero (within tolerance),
    /// or -1 when there is no constant term.
    int constant_term_index(double tol = kRegroupTol) const;

private:
    Fewnomial(int nvars, std::vector<Term> terms)
        : nvars_(nvars), terms_(std::move(terms)) {}

    int nvars_ = 0;
    std::vector<Term> terms_;
};

double evaluate(const Fewnomial& f, const PositivePoint& x);

/// Value of f at exp(u), computed directly as sum of c_i * exp(<a_i, u>).
/// Terms are accumulated in increasing order of magnitude; when the largest
/// term magnitude would overflow, the sum is scaled internally and the
/// result may be +-infinity while its sign stays meaningful.
double evaluate_log(const Fewnomial& f, const LogPoint& u);

/// Gradient of u -> evaluate_log(f, u). Vanishes at u exactly when exp(u)
/// is a critical point of f on the orthant.
Vec gradient_log(const Fewnomial& f, const LogPoint& u);

/// Hessian of u -> evaluate_log(f, u), row-major nvars x nvars.
Vec hessian_log(const Fewnomial& f, const LogPoint& u);

/// |f(e^u)| divided by the sum of term magnitudes at u. Stable for any
/// magnitude scale; used to decide whether a point sits on the zero set.
double relative_residual(const Fewnomial& f, const LogPoint& u);

/// Sign of evaluate_log, with exact zero reported as 0.
int sign_at(const Fewnomial& f, const LogPoint& u);

/// Divides f by its pivot term: returns c_p^-1 * x^-a_p * f. The pivot
/// becomes the constant term 1; the zero set on the orthant is unchanged
/// and the Newton polytope is translated.
Fewnomial monomial_normalize(const Fewnomial& f, std::size_t pivot);

/// Number of sign alternations of the coefficients ordered by increasing
/// exponent. Univariate input only; real exponents allowed.
int sign_changes(const Fewnomial& f);

}  // namespace fewnomial
