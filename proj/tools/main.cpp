#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fewnomial/bounds.hpp"
#include "fewnomial/census.hpp"
#include "fewnomial/generate.hpp"
#include "fewnomial/io.hpp"
#include "fewnomial/newton.hpp"
#include "fewnomial/parallel.hpp"
#include "fewnomial/registry.hpp"
#include "fewnomial/transform.hpp"

using namespace fewnomial;

namespace {

Vec parse_pair(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    double a = 0.0, b = 0.0;
    char comma = 0;
    if (!(in >> a >> comma >> b) || comma != ',')
        raise(Errc::invalid_argument, what + " must be two comma-separated numbers");
    return Vec{a, b};
}

int cmd_verify() {
    std::vector<VerifyRow> rows = run_verification();
    bool all_pass = true;
    for (const VerifyRow& row : rows) {
        std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.name << "  (" << row.detail
                  << ")\n";
        all_pass = all_pass && row.pass;
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_bound(const std::string& quantity, int n, int m, bool no_special_cases, bool sharpen) {
    BoundEngine engine(BoundEngine::Options{!no_special_cases});
    auto q = quantity_from_name(quantity);
    if (!q) raise(Errc::invalid_argument, "unknown quantity " + quantity);

    BoundResult result;
    switch (*q) {
        case Quantity::P: result = engine.p_bound(n, m); break;
        case Quantity::PComp: result = engine.p_comp_bound(n, m); break;
        case Quantity::PNon: result = engine.p_non_bound(n, m); break;
        case Quantity::KPrime: result = engine.kprime_best(n, m); break;
        case Quantity::NonFullDim: result = engine.fulldim_bounds(n, m, sharpen).noncompact; break;
        case Quantity::TotFullDim: result = engine.fulldim_bounds(n, m, sharpen).total; break;
    }
    std::cout << format_trace(result);
    if (!replay_trace(result, engine)) {
        std::cerr << "trace replay FAILED\n";
        return 1;
    }
    return 0;
}

int cmd_newton(const std::string& path) {
    Fewnomial f = parse_fewnomial_file(path);
    std::cout << "nvars " << f.nvars() << "  terms " << f.term_count() << "\n";
    std::cout << "newton_dimension " << newton_dimension(f) << "\n";
    if (f.nvars() == 2) {
        auto [summary, quad] = hull_and_classify(f);
        std::cout << "hull_vertices";
        for (std::size_t i = 0; i < summary.hull_vertices.size(); ++i)
            std::cout << " (" << summary.hull_vertices[i][0] << "," << summary.hull_vertices[i][1]
                      << ")" << (summary.vertex_signs[i] > 0 ? "+" : "-");
        std::cout << "\n";
        std::cout << "interior_or_edge_points " << summary.interior_or_edge_points.size() << "\n";
        std::cout << "quadrilateral " << quad.is_quadrilateral << "  parallel_opposite_sides "
                  << quad.has_parallel_opposite_sides << "  adjacent_signs_opposite "
                  << quad.adjacent_signs_opposite << "\n";
        std::cout << "normal_form_hypotheses_met " << quad.equiv_hypotheses_met << "\n";
    }
    return 0;
}

int cmd_normalize(const std::string& path) {
    Fewnomial f = parse_fewnomial_file(path);
    NormalForm4 nf = normalize_to_standard_form(f);
    std::cout << std::setprecision(17);
    std::cout << "A " << nf.A << "\nc " << nf.c << "\nd " << nf.d << "\n";
    std::cout << "matrix [" << nf.transform.matrix(0, 0) << " " << nf.transform.matrix(0, 1)
              << "; " << nf.transform.matrix(1, 0) << " " << nf.transform.matrix(1, 1) << "]\n";
    std::cout << "rescale " << nf.rescale[0] << " " << nf.rescale[1] << "\n";
    std::cout << "pivot " << nf.pivot_constant.coefficient << " x^(" << nf.pivot_constant.exponent[0]
              << "," << nf.pivot_constant.exponent[1] << ")" << (nf.negated ? " (negated)" : "")
              << "\n";
    for (const std::string& step : nf.transform.trail) std::cout << "step: " << step << "\n";
    std::cout << "normal_form:\n" << to_file_format(nf.normal_fewnomial());
    return 0;
}

int cmd_restrict(const std::string& path, const std::string& point, const std::string& direction) {
    Fewnomial f = parse_fewnomial_file(path);
    PositivePoint p(parse_pair(point, "--point"));
    Vec u = parse_pair(direction, "--direction");
    CurveRestriction r = restrict_to_curve(f, p, u);
    std::cout << to_file_format(r.restricted);
    return 0;
}

int cmd_count(const std::string& path, double window, int resolution, int max_doublings,
              const std::string& contour_path) {
    Fewnomial f = parse_fewnomial_file(path);
    GridSpec grid;
    grid.half_width = window;
    grid.resolution = resolution;
    grid.max_doublings = max_doublings;

    if (f.nvars() == 1) {
        RootScan scan = isolate_roots_1d(f, grid);
        std::cout << "roots " << scan.brackets.size() << "  sign_changes " << sign_changes(f)
                  << "  certified " << scan.within_descartes << "\n";
        std::cout << std::setprecision(17);
        for (const RootBracket& b : scan.brackets)
            std::cout << "bracket " << b.lo << " " << b.hi << "\n";
        return 0;
    }
    if (f.nvars() == 2) {
        CensusOptions opts;
        opts.contours = !contour_path.empty();
        Census c = census_stabilized(f, grid, opts);
        std::cout << "tot " << c.tot << "  comp " << c.comp << "  non " << c.non
                  << "  converged " << c.converged << "  window " << c.window_used.half_width
                  << "  resolution " << c.window_used.resolution << "\n";
        if (!contour_path.empty()) {
            std::ofstream out(contour_path);
            if (!out) raise(Errc::invalid_argument, "cannot write " + contour_path);
            write_contours(out, c);
        }
        return 0;
    }
    if (f.nvars() == 3) {
        SliceCensus sc = noncompact_census_3d(f, grid);
        std::cout << "noncompact_upper_estimate " << sc.upper_estimate << "\n";
        for (std::size_t i = 0; i < sc.family.slices.size(); ++i) {
            const SliceLevel& level = sc.family.levels[i];
            const Census& c = sc.slice_censuses[i];
            std::cout << "slice x" << level.axis + 1 << " = " << level.level << ": tot " << c.tot
                      << " comp " << c.comp << " non " << c.non << " converged " << c.converged
                      << "\n";
        }
        return 0;
    }
    raise(Errc::unsupported_dimension, "count supports 1, 2, or 3 variables");
}

int cmd_random_census(int n, int m, int count, std::uint64_t seed, const std::string& out_path) {
    if (n < 1 || n > 3) raise(Errc::unsupported_dimension, "random census supports n in {1,2,3}");
    if (m < 2) raise(Errc::invalid_argument, "need m >= 2");
    if (count < 1) raise(Errc::invalid_argument, "need count >= 1");

    // Instances are drawn up front from one seeded stream, so the report
    // does not depend on the worker count.
    Rng rng(seed);
    std::vector<Fewnomial> instances;
    instances.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) instances.push_back(random_fewnomial(rng, n, m));

    BoundEngine engine;
    GridSpec grid;
    CensusOptions quiet;
    quiet.contours = false;

    std::vector<ReportRow> rows(static_cast<std::size_t>(count));
    parallel_for(count, [&](long long i) {
        const Fewnomial& f = instances[static_cast<std::size_t>(i)];
        ReportRow row;
        row.instance = i;
        row.n = n;
        row.m = m;
        row.newton_dim = newton_dimension(f);
        if (n == 1) {
            RootScan scan = isolate_roots_1d(f, grid);
            row.tot = static_cast<int>(scan.brackets.size());
            row.comp = row.tot;
            row.non = 0;
            row.bound = sign_changes(f);
            row.bound_source = "descartes";
            row.violation = !scan.within_descartes;
        } else if (n == 2) {
            Census c = census_stabilized(f, grid, quiet);
            row.tot = c.tot;
            row.comp = c.comp;
            row.non = c.non;
            DimensionBounds db = engine.dimension_dispatch(n, m, row.newton_dim);
            row.bound = db.total.value;
            row.bound_source = db.total.trace.back().rule;
            row.violation = BigInt(c.tot) > db.total.value;
        } else {
            if (row.newton_dim == 3) {
                SliceCensus sc = noncompact_census_3d(f, grid);
                row.non = sc.upper_estimate;
                FullDimBounds fd = engine.fulldim_bounds(n, m, true);
                row.bound = fd.noncompact.value;
                row.bound_source = fd.noncompact.trace.back().rule;
                row.violation = BigInt(sc.upper_estimate) > fd.noncompact.value;
            } else {
                DimensionBounds db = engine.dimension_dispatch(n, m, row.newton_dim);
                row.bound = db.total.value;
                row.bound_source = db.total.trace.back().rule;
                row.violation = false;
            }
        }
        rows[static_cast<std::size_t>(i)] = row;
    });

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) raise(Errc::invalid_argument, "cannot write " + out_path);
        out = &file;
    }
    write_census_csv(*out, rows);

    int violations = 0;
    for (const ReportRow& row : rows)
        if (row.violation) {
            ++violations;
            std::cerr << "VIOLATION instance " << row.instance << ": counts (" << row.tot << ","
                      << row.comp << "," << row.non << ") exceed bound " << row.bound << " ["
                      << row.bound_source << "]\n";
        }
    if (violations > 0) {
        std::cerr << violations << " bound violation(s)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fewnomial: component-count bounds and numerical censuses for sparse\n"
        "polynomials (fewnomials) on the positive orthant"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the built-in verification registry");

    std::string quantity;
    int bn = 0, bm = 0;
    bool no_special_cases = false, sharpen = false;
    auto* bound = app.add_subcommand("bound", "evaluate a component-count bound with its trace");
    bound->add_option("quantity", quantity,
                      "one of P, Pcomp, Pnon, Kprime, NonFulldim, TotFulldim")
        ->required();
    bound->add_option("n", bn, "number of variables")->required();
    bound->add_option("m", bm, "number of terms")->required();
    bound->add_flag("--no-special-cases", no_special_cases,
                    "disable the sharp 4-nomial/5-nomial table entries");
    bound->add_flag("--sharpen", sharpen,
                    "use sharp per-slice totals for NonFulldim/TotFulldim");

    std::string newton_path;
    auto* newton = app.add_subcommand("newton", "Newton polytope summary of a fewnomial file");
    newton->add_option("file", newton_path, "fewnomial file")->required();

    std::string normalize_path;
    auto* normalize = app.add_subcommand(
        "normalize", "reduce a bivariate 4-nomial to 1 - x1 - x2 + A x1^c x2^d");
    normalize->add_option("file", normalize_path, "fewnomial file")->required();

    std::string restrict_path, point_text, direction_text;
    auto* restrict_cmd =
        app.add_subcommand("restrict", "restrict a bivariate fewnomial to a curve x^u = p^u");
    restrict_cmd->add_option("file", restrict_path, "fewnomial file")->required();
    restrict_cmd->add_option("--point", point_text, "base point p as x1,x2")->required();
    restrict_cmd->add_option("--direction", direction_text, "direction u as u1,u2")->required();

    std::string count_path, contour_path;
    double window = 12.0;
    int resolution = 512, max_doublings = 4;
    auto* count = app.add_subcommand("count", "census of the zero set in the positive orthant");
    count->add_option("file", count_path, "fewnomial file")->required();
    count->add_option("--window", window, "log-coordinate half width (default 12)");
    count->add_option("--res", resolution, "cells per axis, power of two (default 512)");
    count->add_option("--max-doublings", max_doublings, "stabilization budget (default 4)");
    count->add_option("--contours", contour_path, "write contour polylines to this file");

    int rn = 0, rm = 0, rcount = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    auto* random_census = app.add_subcommand(
        "random-census",
        "census a batch of random fewnomials and compare against the bounds; CSV columns: " +
            std::string(kReportHeader) +
            " (tot/comp/non are -1 when not computed; for n=3 `non` holds the slice-harness "
            "estimate; violations echo to stderr). Coefficients are uniform in [-1,1], exponents "
            "uniform in [-5,5]^n, sized for the default window W=12; scale --window if you scale "
            "the exponent range. FEWNOMIAL_THREADS caps the worker count.");
    random_census->add_option("n", rn, "number of variables, 1..3")->required();
    random_census->add_option("m", rm, "number of terms")->required();
    random_census->add_option("count", rcount, "number of instances")->required();
    random_census->add_option("seed", seed, "random seed")->required();
    random_census->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify();
        if (bound->parsed()) return cmd_bound(quantity, bn, bm, no_special_cases, sharpen);
        if (newton->parsed()) return cmd_newton(newton_path);
        if (normalize->parsed()) return cmd_normalize(normalize_path);
        if (restrict_cmd->parsed()) return cmd_restrict(restrict_path, point_text, direction_text);
        if (count->parsed())
            return cmd_count(count_path, window, resolution, max_doublings, contour_path);
        if (random_census->parsed()) return cmd_random_census(rn, rm, rcount, seed, out_path);
    } catch (const Error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
