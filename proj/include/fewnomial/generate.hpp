#pragma once

#include <cstdint>
#include <random>

#include "fewnomial/core.hpp"
#include "fewnomial/linalg.hpp"

namespace fewnomial {

/// Deterministic random source. Doubles are derived from raw engine bits so
/// the stream does not depend on library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit();                          // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    int uniform_int(int lo, int hi);        // [lo, hi]
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// m terms, coefficients uniform in [-1,1] excluding zero, exponents
/// uniform in [exp_lo, exp_hi]^n.
Fewnomial random_fewnomial(Rng& rng, int nvars, int m,
                           double exp_lo = -5.0, double exp_hi = 5.0);

/// Product of `shears` unit shears with alternating axes and random signs:
/// integer matrix with determinant +-1 and modest condition number.
Matrix random_unimodular(Rng& rng, int n, int shears);

/// gamma * x^b * f for random nonzero gamma and small random b. Leaves the
/// zero set untouched.
Fewnomial random_monomial_multiple(Rng& rng, const Fewnomial& f,
                                   double exp_range = 3.0);

/// 1 - x1 - x2 + A x1^c x2^d.
Fewnomial standard_form_fewnomial(double a, double c, double d);

/// Bivariate 4-nomial in standard form whose zero set has a critical point:
/// A is solved from f(p) = 0, grad f(p) = 0 with p = (c, d) / (c + d - 1).
struct TangentInstance {
    Fewnomial f;
    PositivePoint critical_point;
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
};

TangentInstance tangent_instance(double c, double d);

}  // namespace fewnomial
