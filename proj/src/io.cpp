#include "fewnomial/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fewnomial {

namespace {

void strip_comment(std::string& line) {
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

double parse_number(const std::string& token, int line_no) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        raise(Errc::syntax_error, "line " + std::to_string(line_no) + ": not a number: " + token,
              line_no);
    }
    if (used != token.size())
        raise(Errc::syntax_error, "line " + std::to_string(line_no) + ": trailing characters in " + token,
              line_no);
    return value;
}

}  // namespace

Fewnomial parse_fewnomial(std::istream& in) {
    std::string line;
    int line_no = 0;
    int nvars = 0;
    long long nterms = -1;
    std::vector<Term> terms;
    int header_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);

        if (nterms < 0) {
            std::string tag;
            ls >> tag;
            if (tag != "fewnomial")
                raise(Errc::syntax_error,
                      "line " + std::to_string(line_no) + ": expected `fewnomial <nvars> <nterms>`",
                      line_no);
            if (!(ls >> nvars >> nterms))
                raise(Errc::syntax_error, "line " + std::to_string(line_no) + ": malformed header",
                      line_no);
            std::string extra;
            if (ls >> extra)
                raise(Errc::syntax_error, "line " + std::to_string(line_no) + ": extra header field",
                      line_no);
            if (nvars < 1 || nterms < 1)
                raise(Errc::inconsistent_header, "header needs nvars >= 1 and nterms >= 1", line_no);
            header_line = line_no;
            continue;
        }

        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (static_cast<int>(tokens.size()) != nvars + 1)
            raise(Errc::syntax_error,
                  "line " + std::to_string(line_no) + ": expected coefficient plus " +
                      std::to_string(nvars) + " exponents",
                  line_no);

        Term t;
        t.coefficient = parse_number(tokens[0], line_no);
        if (t.coefficient == 0.0)
            raise(Errc::zero_coefficient, "line " + std::to_string(line_no) + ": zero coefficient",
                  line_no);
        for (int j = 0; j < nvars; ++j)
            t.exponent.push_back(parse_number(tokens[static_cast<std::size_t>(j) + 1], line_no));
        terms.push_back(std::move(t));
    }

    if (nterms < 0) raise(Errc::inconsistent_header, "missing header line");
    if (static_cast<long long>(terms.size()) != nterms)
        raise(Errc::inconsistent_header,
              "header announced " + std::to_string(nterms) + " terms but " +
                  std::to_string(terms.size()) + " were given",
              header_line);
    return Fewnomial::build(nvars, std::move(terms));
}

Fewnomial parse_fewnomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::invalid_argument, "cannot open " + path);
    return parse_fewnomial(in);
}

std::string to_file_format(const Fewnomial& f) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "fewnomial " << f.nvars() << " " << f.term_count() << "\n";
    for (const Term& t : f.terms()) {
        os << t.coefficient;
        for (double e : t.exponent) os << " " << e;
        os << "\n";
    }
    return os.str();
}

void write_contours(std::ostream& out, const Census& census) {
    out << std::setprecision(17);
    for (const Contour& contour : census.contours) {
        out << "component " << contour.component << " "
            << (contour.compact ? "compact" : "noncompact") << ":";
        for (const auto& p : contour.points) out << " " << p[0] << "," << p[1];
        out << "\n";
    }
}

const char* const kReportHeader =
    "instance,n,m,newton_dim,tot,comp,non,bound,bound_source,violation";

void write_census_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << kReportHeader << "\n";
    for (const ReportRow& r : rows) {
        out << r.instance << "," << r.n << "," << r.m << "," << r.newton_dim << "," << r.tot
            << "," << r.comp << "," << r.non << "," << r.bound << "," << r.bound_source << ","
            << (r.violation ? 1 : 0) << "\n";
    }
}

}  // namespace fewnomial
