#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/census.hpp"
#include "fewnomial/core.hpp"

namespace fewnomial {

/// File format: first non-comment line `fewnomial <nvars> <nterms>`, then
/// one line per term holding the coefficient followed by nvars exponents.
/// `#` starts a comment. Parse errors report 1-based line numbers.
Fewnomial parse_fewnomial(std::istream& in);
Fewnomial parse_fewnomial_file(const std::string& path);

/// Canonical text form: header plus one term line each, 17 significant
/// digits. Reparsing yields an equal fewnomial.
std::string to_file_format(const Fewnomial& f);

/// One polyline per line: `component <id> <compact|noncompact>:` followed
/// by space-separated `u1,u2` pairs in log coordinates.
void write_contours(std::ostream& out, const Census& census);

struct ReportRow {
    long long instance = 0;
    int n = 0;
    int m = 0;
    int newton_dim = 0;
    int tot = -1;   // -1 marks a count that was not computed
    int comp = -1;
    int non = -1;
    BigInt bound;
    std::string bound_source;
    bool violation = false;
};

extern const char* const kReportHeader;

void write_census_csv(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace fewnomial
