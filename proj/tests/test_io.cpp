#include "doctest.h"

#include <cmath>
#include <sstream>

#include "fewnomial/generate.hpp"
#include "fewnomial/io.hpp"
#include "fewnomial/registry.hpp"

using namespace fewnomial;

TEST_CASE("parse the hyperbola witness file") {
    std::istringstream in(
        "# the hyperbola example\n"
        "fewnomial 2 4\n"
        "1 0 0\n"
        "-2 1 0\n"
        "-1 0 1\n"
        "1 1 1\n");
    Fewnomial f = parse_fewnomial(in);
    Fewnomial expected = witness_hyperbola();
    REQUIRE(f.term_count() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(f.term(i).coefficient == expected.term(i).coefficient);
        CHECK(f.term(i).exponent == expected.term(i).exponent);
    }
}

TEST_CASE("header and term-count mismatches are reported") {
    std::istringstream empty("fewnomial 2 0\n");
    try {
        parse_fewnomial(empty);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inconsistent_header);
    }

    std::istringstream missing("fewnomial 2 3\n1 0 0\n-1 1 1\n");
    try {
        parse_fewnomial(missing);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inconsistent_header);
    }
}

TEST_CASE("zero coefficients and syntax errors carry line numbers") {
    std::istringstream zero("fewnomial 2 1\n0 1 1\n");
    try {
        parse_fewnomial(zero);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::zero_coefficient);
        CHECK(e.line() == 2);
    }

    std::istringstream garbage("fewnomial 2 1\n1 x 1\n");
    try {
        parse_fewnomial(garbage);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::syntax_error);
        CHECK(e.line() == 2);
    }

    std::istringstream short_line("fewnomial 2 1\n1 0\n");
    try {
        parse_fewnomial(short_line);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::syntax_error);
    }
}

TEST_CASE("serialize then reparse is the identity") {
    Rng rng(21);
    for (int it = 0; it < 50; ++it) {
        int n = rng.uniform_int(1, 3);
        int m = rng.uniform_int(1, 6);
        Fewnomial f = random_fewnomial(rng, n, m);
        std::string text = to_file_format(f);
        std::istringstream in(text);
        Fewnomial g = parse_fewnomial(in);
        REQUIRE(g.term_count() == f.term_count());
        for (int i = 0; i < f.term_count(); ++i) {
            CHECK(g.term(static_cast<std::size_t>(i)).coefficient ==
                  f.term(static_cast<std::size_t>(i)).coefficient);
            CHECK(g.term(static_cast<std::size_t>(i)).exponent ==
                  f.term(static_cast<std::size_t>(i)).exponent);
        }
        // Serialization is canonical, so a second round trip is byte-equal.
        CHECK(to_file_format(g) == text);
    }
}

TEST_CASE("contour export format") {
    Census census;
    Contour arc;
    arc.component = 0;
    arc.compact = false;
    arc.points = {{0.5, -1.0}, {0.625, -0.75}};
    census.contours.push_back(arc);
    std::ostringstream out;
    write_contours(out, census);
    CHECK(out.str() == "component 0 noncompact: 0.5,-1 0.625,-0.75\n");
}

TEST_CASE("csv report format") {
    ReportRow row;
    row.instance = 7;
    row.n = 2;
    row.m = 4;
    row.newton_dim = 2;
    row.tot = 2;
    row.comp = 0;
    row.non = 2;
    row.bound = 2;
    row.bound_source = "table";
    row.violation = false;
    std::ostringstream out;
    write_census_csv(out, {row});
    CHECK(out.str() ==
          "instance,n,m,newton_dim,tot,comp,non,bound,bound_source,violation\n"
          "7,2,4,2,2,0,2,2,table,0\n");
}

TEST_CASE("verification registry passes on a fresh build") {
    std::vector<VerifyRow> rows = run_verification();
    CHECK(rows.size() >= 14);
    for (const VerifyRow& row : rows) {
        INFO(row.name, ": ", row.detail);
        CHECK(row.pass);
    }
}
