#include "doctest.h"

#include <cmath>

#include "fewnomial/census.hpp"
#include "fewnomial/generate.hpp"
#include "fewnomial/newton.hpp"
#include "fewnomial/registry.hpp"

using namespace fewnomial;

namespace {

const CensusOptions kQuiet = [] {
    CensusOptions o;
    o.contours = false;
    return o;
}();

bool counts_are(const Census& c, int tot, int comp, int non) {
    return c.tot == tot && c.comp == comp && c.non == non;
}

}  // namespace

TEST_CASE("isolate_roots_1d finds the three reference roots") {
    GridSpec grid;
    grid.half_width = 3.0;
    grid.resolution = 512;
    RootScan scan = isolate_roots_1d(witness_lines_univariate(), grid);
    REQUIRE(scan.brackets.size() == 3);
    double expected[3] = {0.0, std::log(2.0), std::log(3.0)};
    for (int i = 0; i < 3; ++i) {
        CHECK(scan.brackets[static_cast<std::size_t>(i)].lo <= expected[i] + 1e-9);
        CHECK(scan.brackets[static_cast<std::size_t>(i)].hi >= expected[i] - 1e-9);
        CHECK(scan.brackets[static_cast<std::size_t>(i)].hi -
                  scan.brackets[static_cast<std::size_t>(i)].lo <=
              1e-11);
    }
    CHECK(scan.within_descartes);
}

TEST_CASE("isolate_roots_1d on rootless and single-root inputs") {
    GridSpec grid;
    Fewnomial pos = Fewnomial::build(1, {Term{1.0, {0.0}}, Term{1.0, {1.0}}});
    CHECK(isolate_roots_1d(pos, grid).brackets.empty());

    Fewnomial f = Fewnomial::build(1, {Term{1.0, {0.0}}, Term{-1.0, {M_PI}}});
    RootScan scan = isolate_roots_1d(f, grid);
    REQUIRE(scan.brackets.size() == 1);
    CHECK(scan.brackets[0].lo <= 1e-9);
    CHECK(scan.brackets[0].hi >= -1e-9);
}

TEST_CASE("descartes ceiling holds on random univariate instances") {
    Rng rng(11);
    GridSpec grid;
    for (int it = 0; it < 200; ++it) {
        int m = rng.uniform_int(2, 5);
        Fewnomial f = random_fewnomial(rng, 1, m);
        RootScan scan = isolate_roots_1d(f, grid);
        CHECK(static_cast<int>(scan.brackets.size()) <= sign_changes(f));
        CHECK(scan.within_descartes);
    }
}

TEST_CASE("census of the oval witness") {
    Census c = census_stabilized(witness_oval(), GridSpec{}, kQuiet);
    CHECK(counts_are(c, 1, 1, 0));
    CHECK(c.converged);
}

TEST_CASE("census of the three-lines witness") {
    Census c = census_stabilized(witness_lines(), GridSpec{}, kQuiet);
    CHECK(counts_are(c, 3, 0, 3));
    CHECK(c.converged);
}

TEST_CASE("census of the hyperbola witness") {
    Census c = census_stabilized(witness_hyperbola(), GridSpec{}, kQuiet);
    CHECK(counts_are(c, 2, 0, 2));
    CHECK(c.converged);
}

TEST_CASE("stabilization recovers from a clipped window") {
    GridSpec small;
    small.half_width = 1.0;
    small.resolution = 128;
    small.max_doublings = 4;
    Census c = census_stabilized(witness_oval(), small, kQuiet);
    CHECK(counts_are(c, 1, 1, 0));
    CHECK(c.converged);
}

TEST_CASE("bounded but non-compact: the circle as a 3-nomial") {
    Fewnomial circle = Fewnomial::build(2, {Term{-1.0, {0.0, 0.0}},
                                            Term{1.0, {2.0, 0.0}},
                                            Term{1.0, {0.0, 2.0}}});
    Census c = census_stabilized(circle, GridSpec{}, kQuiet);
    CHECK(counts_are(c, 1, 0, 1));
    CHECK(c.converged);
}

TEST_CASE("a perturbed oval coefficient empties the zero set") {
    // With -1 instead of -4 the discriminant x1^2 - 4 x1^4 - 12 stays
    // negative, so no real branch survives: the census must see nothing.
    Fewnomial f = Fewnomial::build(2, {Term{1.0, {0.0, 2.0}},
                                       Term{-1.0, {3.0, 1.0}},
                                       Term{1.0, {8.0, 0.0}},
                                       Term{3.0, {4.0, 0.0}}});
    Census c = census_stabilized(f, GridSpec{}, kQuiet);
    CHECK(counts_are(c, 0, 0, 0));
    CHECK(c.converged);
}

TEST_CASE("empty zero set censuses to zero") {
    Fewnomial pos = Fewnomial::build(2, {Term{1.0, {0.0, 0.0}},
                                         Term{1.0, {1.0, 0.0}},
                                         Term{1.0, {0.0, 1.0}}});
    Census c = census_stabilized(pos, GridSpec{}, kQuiet);
    CHECK(counts_are(c, 0, 0, 0));
    CHECK(c.converged);
}

TEST_CASE("census is invariant under monomial changes of variables") {
    Rng rng(12);
    int compared = 0;
    for (int it = 0; it < 12; ++it) {
        Fewnomial f = random_fewnomial(rng, 2, 4, -3.0, 3.0);
        ChangeOfVariables b = ChangeOfVariables::from_matrix(random_unimodular(rng, 2, 2));
        Census base = census_stabilized(f, GridSpec{}, kQuiet);
        Census moved = census_stabilized(apply_change(f, b), GridSpec{}, kQuiet);
        if (!base.converged || !moved.converged) continue;
        CHECK(counts_are(moved, base.tot, base.comp, base.non));
        ++compared;
    }
    CHECK(compared >= 8);
}

TEST_CASE("census is invariant under monomial normalization") {
    Rng rng(13);
    for (int it = 0; it < 8; ++it) {
        Fewnomial f = random_fewnomial(rng, 2, 4, -3.0, 3.0);
        Census base = census_stabilized(f, GridSpec{}, kQuiet);
        for (int k = 0; k < f.term_count(); ++k) {
            Census c =
                census_stabilized(monomial_normalize(f, static_cast<std::size_t>(k)), GridSpec{}, kQuiet);
            CHECK(counts_are(c, base.tot, base.comp, base.non));
        }
    }
}

TEST_CASE("slice harness on an empty trivariate zero set") {
    Fewnomial pos = Fewnomial::build(3, {Term{1.0, {0.0, 0.0, 0.0}},
                                         Term{1.0, {1.0, 0.0, 0.0}},
                                         Term{1.0, {0.0, 1.0, 0.0}},
                                         Term{1.0, {0.0, 0.0, 1.0}},
                                         Term{1.0, {1.0, 1.0, 1.0}}});
    GridSpec grid;
    grid.resolution = 128;
    grid.max_doublings = 2;
    SliceCensus sc = noncompact_census_3d(pos, grid);
    CHECK(sc.upper_estimate == 0);
    CHECK(sc.family.slices.size() == 6);
}

TEST_CASE("slice harness gates on dimension") {
    Fewnomial flat = Fewnomial::build(3, {Term{1.0, {0.0, 0.0, 0.0}},
                                          Term{-1.0, {1.0, 0.0, 0.0}},
                                          Term{1.0, {2.0, 0.0, 0.0}},
                                          Term{-1.0, {3.0, 0.0, 0.0}},
                                          Term{1.0, {4.0, 0.0, 0.0}}});
    GridSpec grid;
    grid.resolution = 128;
    try {
        noncompact_census_3d(flat, grid);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_full_dimensional);
    }
    CHECK_THROWS_AS(noncompact_census_3d(witness_hyperbola(), grid), Error);
}

TEST_CASE("slice harness respects the sharp trivariate bound") {
    Rng rng(14);
    GridSpec grid;
    grid.resolution = 256;
    grid.max_doublings = 3;
    int fulldim = 0;
    for (int it = 0; it < 6 && fulldim < 4; ++it) {
        Fewnomial f = random_fewnomial(rng, 3, 5);
        if (newton_dimension(f) != 3) continue;
        ++fulldim;
        SliceCensus sc = noncompact_census_3d(f, grid);
        CHECK(sc.upper_estimate <= 12);
    }
    CHECK(fulldim >= 4);
}

TEST_CASE("critical zero search finds the tangency point") {
    TangentInstance inst = tangent_instance(2.0, 2.0);
    GridSpec grid;
    auto found = critical_zero_search(inst.f, grid);
    REQUIRE(found.has_value());
    CHECK(found->coords[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(found->coords[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("critical zero search rejects smooth zero sets") {
    GridSpec grid;
    CHECK_FALSE(critical_zero_search(witness_hyperbola(), grid).has_value());

    Fewnomial linear = Fewnomial::build(2, {Term{1.0, {0.0, 0.0}}, Term{-1.0, {1.0, 0.0}}});
    CHECK_FALSE(critical_zero_search(linear, grid).has_value());
}

TEST_CASE("tangency census merges through the critical zero") {
    TangentInstance inst = tangent_instance(2.0, 2.0);
    GridSpec grid;
    auto found = critical_zero_search(inst.f, grid);
    REQUIRE(found.has_value());

    CensusOptions opts = kQuiet;
    opts.merge_points.push_back(to_log(*found));
    Census c = census_stabilized(inst.f, grid, opts);
    CHECK(counts_are(c, 1, 0, 1));
    CHECK(c.converged);
}

TEST_CASE("contour vertices sit on the zero set") {
    Census c = census_stabilized(witness_hyperbola(), GridSpec{});
    REQUIRE(!c.contours.empty());
    int checked = 0;
    for (const Contour& contour : c.contours) {
        for (std::size_t k = 0; k < contour.points.size(); k += 7) {
            LogPoint u(Vec{contour.points[k][0], contour.points[k][1]});
            CHECK(relative_residual(witness_hyperbola(), u) <= 1e-6);
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("contours are deterministic") {
    Census a = census_grid(witness_oval(), GridSpec{});
    Census b = census_grid(witness_oval(), GridSpec{});
    REQUIRE(a.contours.size() == b.contours.size());
    for (std::size_t i = 0; i < a.contours.size(); ++i) {
        CHECK(a.contours[i].component == b.contours[i].component);
        REQUIRE(a.contours[i].points.size() == b.contours[i].points.size());
        for (std::size_t k = 0; k < a.contours[i].points.size(); ++k) {
            CHECK(a.contours[i].points[k][0] == b.contours[i].points[k][0]);
            CHECK(a.contours[i].points[k][1] == b.contours[i].points[k][1]);
        }
    }
}

TEST_CASE("grid validation") {
    GridSpec bad;
    bad.resolution = 100;  // not a power of two
    CHECK_THROWS_AS(validate(bad), Error);
    bad.resolution = 8;
    CHECK_THROWS_AS(validate(bad), Error);
    bad.resolution = 512;
    bad.half_width = -1;
    CHECK_THROWS_AS(validate(bad), Error);
}
