#include "fewnomial/registry.hpp"

#include <sstream>

#include "fewnomial/bounds.hpp"
#include "fewnomial/census.hpp"

namespace fewnomial {

Fewnomial witness_oval() {
    return Fewnomial::build(2, {Term{1.0, {0.0, 2.0}},
                                Term{-4.0, {3.0, 1.0}},
                                Term{1.0, {8.0, 0.0}},
                                Term{3.0, {4.0, 0.0}}});
}

Fewnomial witness_lines() {
    return Fewnomial::build(2, {Term{1.0, {3.0, 0.0}},
                                Term{-6.0, {2.0, 0.0}},
                                Term{11.0, {1.0, 0.0}},
                                Term{-6.0, {0.0, 0.0}}});
}

Fewnomial witness_lines_univariate() {
    return Fewnomial::build(1, {Term{1.0, {3.0}},
                                Term{-6.0, {2.0}},
                                Term{11.0, {1.0}},
                                Term{-6.0, {0.0}}});
}

Fewnomial witness_hyperbola() {
    return Fewnomial::build(2, {Term{1.0, {1.0, 1.0}},
                                Term{-2.0, {1.0, 0.0}},
                                Term{-1.0, {0.0, 1.0}},
                                Term{1.0, {0.0, 0.0}}});
}

namespace {

void check_census(std::vector<VerifyRow>& rows, const std::string& name, const Fewnomial& f,
                  int tot, int comp, int non) {
    CensusOptions quiet;
    quiet.contours = false;
    Census c = census_stabilized(f, GridSpec{}, quiet);
    std::ostringstream detail;
    detail << "expected (" << tot << "," << comp << "," << non << "), got (" << c.tot << ","
           << c.comp << "," << c.non << ")" << (c.converged ? ", converged" : ", NOT converged");
    bool pass = c.tot == tot && c.comp == comp && c.non == non && c.converged;
    rows.push_back(VerifyRow{name, pass, detail.str()});
}

void check_value(std::vector<VerifyRow>& rows, const std::string& name, const BoundResult& r,
                 const BigInt& expected, const BoundEngine& engine) {
    bool pass = r.value == expected && replay_trace(r, engine);
    std::ostringstream detail;
    detail << "expected " << expected << ", got " << r.value
           << (replay_trace(r, engine) ? ", trace replays" : ", trace replay FAILED");
    rows.push_back(VerifyRow{name, pass, detail.str()});
}

}  // namespace

std::vector<VerifyRow> run_verification() {
    std::vector<VerifyRow> rows;

    check_census(rows, "census oval (compact component)", witness_oval(), 1, 1, 0);
    check_census(rows, "census three lines", witness_lines(), 3, 0, 3);
    check_census(rows, "census hyperbola", witness_hyperbola(), 2, 0, 2);

    BoundEngine engine;
    check_value(rows, "K'(2,4) table", engine.kprime_best(2, 4), 5, engine);
    check_value(rows, "K'(2,4) formula", engine.khovanskii_kprime(2, 4), 216, engine);
    check_value(rows, "K'(2,5) formula", engine.khovanskii_kprime(2, 5), 5184, engine);
    check_value(rows, "closed form (2,4)", engine.closed_form_bound(2, 4), 432, engine);
    check_value(rows, "closed form (2,5)", engine.closed_form_bound(2, 5), 10368, engine);

    BoundEngine legacy(BoundEngine::Options{false});
    check_value(rows, "legacy chain P(2,4)", legacy.p_bound(2, 4), 10, legacy);
    check_value(rows, "legacy chain P(7,4)", legacy.p_bound(7, 4), 10, legacy);
    check_value(rows, "legacy chain P(2,5)", legacy.p_bound(2, 5), 5192, legacy);
    check_value(rows, "legacy chain Pnon(3,5)", legacy.p_non_bound(3, 5), 10384, legacy);

    {
        bool pass = true;
        std::ostringstream detail;
        for (int n = 1; n <= 10; ++n) {
            BoundResult r = engine.p_bound(n, 4);
            if (r.value != 3 || !replay_trace(r, engine)) {
                pass = false;
                detail << "P(" << n << ",4) = " << r.value << " ";
            }
        }
        if (pass) detail << "P(n,4) = 3 for n = 1..10";
        rows.push_back(VerifyRow{"sharp P(n,4)", pass, detail.str()});
    }

    check_value(rows, "full-dim Non(3,5)", engine.fulldim_bounds(3, 5).noncompact, 18, engine);
    check_value(rows, "full-dim Non(3,5) refined",
                engine.fulldim_bounds(3, 5, true).noncompact, 12, engine);
    check_value(rows, "full-dim Non(2,4)", engine.fulldim_bounds(2, 4).noncompact, 8, engine);

    {
        bool pass = engine.table().citations_complete();
        rows.push_back(VerifyRow{"table citations", pass,
                                 pass ? "every special case carries a citation"
                                      : "missing citation in the rule table"});
    }
    {
        const SpecialCase* sc = engine.table().find(Quantity::KPrime, 2, 4);
        bool pass = sc && sc->value == 5;
        rows.push_back(VerifyRow{"table K'(2,4) integrity", pass,
                                 pass ? "entry matches the published value"
                                      : "entry does not match the published value"});
    }

    return rows;
}

}  // namespace fewnomial
