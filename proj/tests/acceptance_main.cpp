// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

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

int g_failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%s  criterion %d  %s  (%s; %.1f s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

const CensusOptions kQuiet = [] {
    CensusOptions o;
    o.contours = false;
    return o;
}();

bool counts_are(const Census& c, int tot, int comp, int non) {
    return c.tot == tot && c.comp == comp && c.non == non && c.converged;
}

double condition_number(const Matrix& b) {
    double t = 0.0;
    for (double x : b.a) t += x * x;
    double det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    double disc = std::sqrt(std::max(t * t - 4 * det * det, 0.0));
    double s1 = (t + disc) / 2, s2 = (t - disc) / 2;
    return s2 > 0 ? std::sqrt(s1 / s2) : 1e300;
}

Matrix well_conditioned_unimodular(Rng& rng) {
    for (;;) {
        Matrix b = random_unimodular(rng, 2, rng.uniform_int(1, 3));
        if (condition_number(b) <= 10.0) return b;
    }
}

// For zero sets with large exponents a strong shear compresses the curve in
// log coordinates below the cell size, which fragments a sign census; the
// topological checks use a single shear.
Matrix gentle_unimodular(Rng& rng) {
    for (;;) {
        Matrix b = random_unimodular(rng, 2, 1);
        if (condition_number(b) <= 3.0) return b;
    }
}

// ---------------------------------------------------------------------------

void criterion_1_witness_censuses() {
    Timer timer;
    bool pass = true;
    std::ostringstream detail;
    struct Expect {
        const char* name;
        Fewnomial f;
        int tot, comp, non;
    } cases[] = {
        {"oval", witness_oval(), 1, 1, 0},
        {"lines", witness_lines(), 3, 0, 3},
        {"hyperbola", witness_hyperbola(), 2, 0, 2},
    };
    for (const Expect& e : cases) {
        Timer one;
        Census c = census_stabilized(e.f, GridSpec{}, kQuiet);
        double t = one.seconds();
        bool ok = counts_are(c, e.tot, e.comp, e.non) && t < 5.0;
        detail << e.name << " (" << c.tot << "," << c.comp << "," << c.non << ") in " << t
               << " s" << (ok ? "; " : " MISMATCH; ");
        pass = pass && ok;
    }
    report(1, "witness censuses (1,1,0) (3,0,3) (2,0,2)", pass, detail.str(), timer.seconds());
}

void criterion_2_bound_values() {
    Timer timer;
    BoundEngine engine;
    bool pass = engine.kprime_best(2, 4).value == 5 &&
                engine.khovanskii_kprime(2, 4).value == 216 &&
                engine.khovanskii_kprime(2, 5).value == 5184 &&
                engine.closed_form_bound(2, 4).value == 432 &&
                engine.closed_form_bound(2, 5).value == 10368;
    report(2, "bound values 5 / 216 / 5184 / 432 / 10368", pass,
           pass ? "all exact" : "value mismatch", timer.seconds());
}

void criterion_3_legacy_chains() {
    Timer timer;
    BoundEngine legacy(BoundEngine::Options{false});
    std::ostringstream detail;

    BoundResult pcomp = legacy.p_comp_bound(2, 4);
    BoundResult pnon = legacy.p_non_bound(2, 4);
    BoundResult p24 = legacy.p_bound(2, 4);
    bool chain_p4 = pcomp.value == 4 && pnon.value == 6 && p24.value == 10 &&
                    replay_trace(p24, legacy);
    detail << "P(2,4): 2*floor(5/2) + 2*3 = " << pcomp.value << " + " << pnon.value << " = "
           << p24.value;

    BoundResult p25 = legacy.p_bound(2, 5);
    BoundResult pn35 = legacy.p_non_bound(3, 5);
    bool chain_non35 = p25.value == 5192 && pn35.value == 10384 && replay_trace(pn35, legacy) &&
                       legacy.p_comp_bound(2, 5).value == 5184 &&
                       legacy.p_non_bound(2, 5).value == 8;
    detail << "; Pnon(3,5): 2*(5184 + 8) = " << pn35.value;

    report(3, "legacy chains 10 and 10384, replayed", chain_p4 && chain_non35, detail.str(),
           timer.seconds());
}

void criterion_4_dispatcher_specials() {
    Timer timer;
    BoundEngine engine;
    bool pass = true;
    std::ostringstream detail;
    for (int n = 1; n <= 10; ++n)
        if (engine.p_bound(n, 4).value != 3) {
            pass = false;
            detail << "P(" << n << ",4) != 3; ";
        }
    BoundResult generic = engine.fulldim_bounds(3, 5).noncompact;
    BoundResult refined = engine.fulldim_bounds(3, 5, true).noncompact;
    if (generic.value != 18 || refined.value != 12) pass = false;
    detail << "P(n,4) = 3 for n = 1..10, Non(3,5) = " << generic.value << " generic, "
           << refined.value << " refined";
    report(4, "sharp dispatch P(n,4) = 3 and 18 -> 12 refinement", pass, detail.str(),
           timer.seconds());
}

// Shared with criterion 7: bivariate sweep censuses with comp >= 1 must have
// tot == 1.
int g_sweep_compact_violations = 0;

void criterion_5_random_sweeps() {
    Timer timer;
    std::ostringstream detail;
    bool pass = true;

    {  // 1000 bivariate 4-nomials.
        Rng rng(20240);
        std::vector<Fewnomial> instances;
        for (int i = 0; i < 1000; ++i) instances.push_back(random_fewnomial(rng, 2, 4));
        std::vector<Census> results(instances.size());
        parallel_for(static_cast<long long>(instances.size()), [&](long long i) {
            results[static_cast<std::size_t>(i)] =
                census_stabilized(instances[static_cast<std::size_t>(i)], GridSpec{}, kQuiet);
        });
        int max_tot = 0, dim2_max_tot = 0, comp_max = 0;
        int violations = 0;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Census& c = results[i];
            max_tot = std::max(max_tot, c.tot);
            comp_max = std::max(comp_max, c.comp);
            if (c.tot > 3) ++violations;
            if (newton_dimension(instances[i]) == 2) {
                dim2_max_tot = std::max(dim2_max_tot, c.tot);
                if (c.tot > 2) ++violations;
            }
            if (c.comp > 1) ++violations;
            if (c.comp >= 1 && c.tot != 1) ++g_sweep_compact_violations;
        }
        pass = pass && violations == 0;
        detail << "bivariate: max tot " << max_tot << " (dim-2 subset " << dim2_max_tot
               << "), max comp " << comp_max << ", " << violations << " violations";
    }

    {  // 1000 univariate fewnomials.
        Rng rng(20241);
        int violations = 0;
        GridSpec grid;
        for (int i = 0; i < 1000; ++i) {
            int m = 2 + i % 5;
            Fewnomial f = random_fewnomial(rng, 1, m);
            RootScan scan = isolate_roots_1d(f, grid);
            if (static_cast<int>(scan.brackets.size()) > sign_changes(f)) ++violations;
        }
        pass = pass && violations == 0;
        detail << "; univariate: " << violations << " Descartes violations";
    }

    {  // 200 full-dimensional trivariate 5-nomials.
        Rng rng(20242);
        std::vector<Fewnomial> instances;
        while (static_cast<int>(instances.size()) < 200) {
            Fewnomial f = random_fewnomial(rng, 3, 5);
            if (newton_dimension(f) == 3) instances.push_back(std::move(f));
        }
        std::vector<int> estimates(instances.size(), 0);
        parallel_for(static_cast<long long>(instances.size()), [&](long long i) {
            estimates[static_cast<std::size_t>(i)] =
                noncompact_census_3d(instances[static_cast<std::size_t>(i)], GridSpec{})
                    .upper_estimate;
        });
        int max_estimate = 0, violations = 0;
        for (int e : estimates) {
            max_estimate = std::max(max_estimate, e);
            if (e > 12) ++violations;
        }
        pass = pass && violations == 0;
        detail << "; trivariate: max slice estimate " << max_estimate << ", " << violations
               << " violations";
    }

    double t = timer.seconds();
    pass = pass && t <= 600.0;
    report(5, "random sweeps obey the bounds (runtime <= 10 min)", pass, detail.str(), t);
}

void criterion_6_structural_properties() {
    Timer timer;
    std::ostringstream detail;
    bool pass = true;

    {  // Census invariance under 100 well-conditioned changes of variables.
        Rng rng(333);
        std::vector<std::pair<Fewnomial, Fewnomial>> pairs;
        while (pairs.size() < 100) {
            Fewnomial f = random_fewnomial(rng, 2, 4, -3.0, 3.0);
            ChangeOfVariables b =
                ChangeOfVariables::from_matrix(well_conditioned_unimodular(rng));
            pairs.emplace_back(f, apply_change(f, b));
        }
        std::vector<char> equal(pairs.size(), 0);
        parallel_for(static_cast<long long>(pairs.size()), [&](long long i) {
            const auto& [f, g] = pairs[static_cast<std::size_t>(i)];
            Census a = census_stabilized(f, GridSpec{}, kQuiet);
            Census b = census_stabilized(g, GridSpec{}, kQuiet);
            equal[static_cast<std::size_t>(i)] = a.converged && b.converged && a.tot == b.tot &&
                                                 a.comp == b.comp && a.non == b.non;
        });
        int mismatches = 0;
        for (char e : equal)
            if (!e) ++mismatches;
        pass = pass && mismatches == 0;
        detail << "change-of-variables invariance: " << mismatches << " mismatches";
    }

    {  // 100 disguised normal forms.
        Rng rng(334);
        int bad_parameters = 0, census_mismatches = 0;
        std::vector<std::pair<Fewnomial, Fewnomial>> pairs;
        while (pairs.size() < 100) {
            double a = rng.uniform(0.3, 4.0);
            double c = rng.uniform(1.2, 3.5);
            double d = rng.uniform(1.2, 3.5);
            Fewnomial f0 = standard_form_fewnomial(a, c, d);
            Fewnomial f = random_monomial_multiple(
                rng,
                apply_change(f0, ChangeOfVariables::from_matrix(well_conditioned_unimodular(rng))));
            NormalForm4 nf = normalize_to_standard_form(f);
            if (!(nf.A > 0.0 && nf.c > 1.0 && nf.d > 1.0)) {
                ++bad_parameters;
                continue;
            }
            pairs.emplace_back(f, nf.normal_fewnomial());
        }
        std::vector<char> equal(pairs.size(), 0);
        parallel_for(static_cast<long long>(pairs.size()), [&](long long i) {
            const auto& [f, g] = pairs[static_cast<std::size_t>(i)];
            Census a = census_stabilized(f, GridSpec{}, kQuiet);
            Census b = census_stabilized(g, GridSpec{}, kQuiet);
            equal[static_cast<std::size_t>(i)] = a.converged && b.converged && a.tot == b.tot &&
                                                 a.comp == b.comp && a.non == b.non;
        });
        for (char e : equal)
            if (!e) ++census_mismatches;
        pass = pass && bad_parameters == 0 && census_mismatches == 0;
        detail << "; normal forms: " << bad_parameters << " invalid parameters, "
               << census_mismatches << " census mismatches";
    }

    {  // Curve restriction agrees with direct evaluation to 1e-10 relative.
        Rng rng(335);
        int mismatches = 0;
        for (int it = 0; it < 200; ++it) {
            Fewnomial f = random_fewnomial(rng, 2, 4, -3.0, 3.0);
            PositivePoint p(Vec{std::exp(rng.uniform(-1, 1)), std::exp(rng.uniform(-1, 1))});
            Vec u{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            if (u[0] == 0.0 && u[1] == 0.0) u[0] = 1.0;
            CurveRestriction r = restrict_to_curve(f, p, u);
            for (int k = 0; k < 10; ++k) {
                double t = std::exp(rng.uniform(-1.0, 1.0));
                double lhs = evaluate(r.restricted, PositivePoint(Vec{t}));
                double rhs = evaluate(f, r.curve_point(t));
                if (std::fabs(lhs - rhs) > 1e-10 * (std::fabs(lhs) + std::fabs(rhs) + 1e-12))
                    ++mismatches;
            }
        }
        pass = pass && mismatches == 0;
        detail << "; restriction agreement: " << mismatches << " mismatches";
    }

    report(6, "structural properties (invariance, normal forms, restrictions)", pass,
           detail.str(), timer.seconds());
}

void criterion_7_compactness_and_critical_zeros() {
    Timer timer;
    std::ostringstream detail;
    bool pass = true;

    {  // Compact component implies the zero set is that single component.
        Rng rng(777);
        int violations = g_sweep_compact_violations;
        for (int it = 0; it < 20; ++it) {
            Fewnomial f = random_monomial_multiple(
                rng, apply_change(witness_oval(),
                                  ChangeOfVariables::from_matrix(gentle_unimodular(rng))));
            Census c = census_stabilized(f, GridSpec{}, kQuiet);
            if (!c.converged || c.comp < 1 || c.tot != 1) ++violations;
        }
        pass = pass && violations == 0;
        detail << "compact => alone: " << violations << " violations (incl. sweep)";
    }

    {  // A found critical zero forces the census (1, 0, 1).
        Rng rng(778);
        int search_failures = 0, census_failures = 0;
        for (int it = 0; it < 20; ++it) {
            TangentInstance inst = tangent_instance(rng.uniform(1.3, 3.0), rng.uniform(1.3, 3.0));
            Fewnomial f = inst.f;
            if (it % 2) {
                f = random_monomial_multiple(
                    rng, apply_change(f, ChangeOfVariables::from_matrix(gentle_unimodular(rng))));
            }
            auto found = critical_zero_search(f, GridSpec{});
            if (!found) {
                ++search_failures;
                continue;
            }
            CensusOptions opts = kQuiet;
            opts.merge_points.push_back(to_log(*found));
            Census c = census_stabilized(f, GridSpec{}, opts);
            if (!counts_are(c, 1, 0, 1)) ++census_failures;
        }
        pass = pass && search_failures == 0 && census_failures == 0;
        detail << "; critical zeros: " << search_failures << " search failures, "
               << census_failures << " censuses != (1,0,1)";
    }

    report(7, "compact-component and critical-zero behavior", pass, detail.str(),
           timer.seconds());
}

}  // namespace

int main() {
    Timer total;
    criterion_1_witness_censuses();
    criterion_2_bound_values();
    criterion_3_legacy_chains();
    criterion_4_dispatcher_specials();
    criterion_5_random_sweeps();
    criterion_6_structural_properties();
    criterion_7_compactness_and_critical_zeros();
    std::printf("%s  (%d criteria failed; %.1f s total)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}
