#include "fewnomial/generate.hpp"

#include <cmath>

namespace fewnomial {

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

int Rng::uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Fewnomial random_fewnomial(Rng& rng, int nvars, int m, double exp_lo, double exp_hi) {
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double c = 0.0;
        while (c == 0.0) c = rng.uniform(-1.0, 1.0);
        Vec a(static_cast<std::size_t>(nvars));
        for (int j = 0; j < nvars; ++j) a[static_cast<std::size_t>(j)] = rng.uniform(exp_lo, exp_hi);
        terms.push_back(Term{c, std::move(a)});
    }
    return Fewnomial::build(nvars, std::move(terms));
}

Matrix random_unimodular(Rng& rng, int n, int shears) {
    Matrix m = Matrix::identity(n);
    for (int s = 0; s < shears; ++s) {
        int i = rng.uniform_int(0, n - 1);
        int j = rng.uniform_int(0, n - 2);
        if (j >= i) ++j;
        Matrix shear = Matrix::identity(n);
        shear(i, j) = rng.uniform_int(0, 1) ? 1.0 : -1.0;
        m = m * shear;
    }
    return m;
}

Fewnomial random_monomial_multiple(Rng& rng, const Fewnomial& f, double exp_range) {
    double gamma = 0.0;
    while (gamma == 0.0) gamma = rng.uniform(-2.0, 2.0);
    Vec b(static_cast<std::size_t>(f.nvars()));
    for (double& x : b) x = rng.uniform(-exp_range, exp_range);

    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Vec a = t.exponent;
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
        terms.push_back(Term{gamma * t.coefficient, std::move(a)});
    }
    return Fewnomial::build(f.nvars(), std::move(terms));
}

Fewnomial standard_form_fewnomial(double a, double c, double d) {
    return Fewnomial::build(2, {Term{1.0, {0.0, 0.0}},
                                Term{-1.0, {1.0, 0.0}},
                                Term{-1.0, {0.0, 1.0}},
                                Term{a, {c, d}}});
}

TangentInstance tangent_instance(double c, double d) {
    if (!(c > 1.0) || !(d > 1.0))
        raise(Errc::invalid_argument, "tangent instance needs exponents above 1");
    // Solving f(p) = 0 and grad f(p) = 0 for f = 1 - x1 - x2 + A x1^c x2^d
    // gives p = (c, d) / (c + d - 1) and A = 1 / (c p1^(c-1) p2^d).
    double p1 = c / (c + d - 1.0);
    double p2 = d / (c + d - 1.0);
    double a = 1.0 / (c * std::pow(p1, c - 1.0) * std::pow(p2, d));

    TangentInstance inst;
    inst.f = standard_form_fewnomial(a, c, d);
    inst.critical_point = PositivePoint(Vec{p1, p2});
    inst.a = a;
    inst.c = c;
    inst.d = d;
    return inst;
}

}  // namespace fewnomial
