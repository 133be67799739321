#pragma once

#include <string>
#include <vector>

#include "fewnomial/core.hpp"

namespace fewnomial {

/// Reference zero sets with known exact censuses.
Fewnomial witness_oval();              // x2^2 - 4 x1^3 x2 + x1^8 + 3 x1^4: one compact oval
Fewnomial witness_lines();             // x1^3 - 6 x1^2 + 11 x1 - 6, bivariate: three vertical lines
Fewnomial witness_lines_univariate();  // same polynomial in one variable: roots 1, 2, 3
Fewnomial witness_hyperbola();         // x1 x2 - 2 x1 - x2 + 1: two hyperbola branches

struct VerifyRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Built-in verification registry: witness censuses, reference bound
/// values, derivation chains with replay, and the table audit.
std::vector<VerifyRow> run_verification();

}  // namespace fewnomial
