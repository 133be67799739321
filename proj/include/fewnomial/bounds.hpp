#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fewnomial/core.hpp"

namespace fewnomial {

using BigInt = boost::multiprecision::cpp_int;

enum class Quantity { P, PComp, PNon, KPrime, NonFullDim, TotFullDim };

const char* quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string& name);

/// One rule application. `inputs` are the already-derived values the rule
/// consumed, so the step can be recomputed from this record alone.
struct TraceStep {
    Quantity quantity = Quantity::P;
    std::string rule;
    int n = 0;
    int m = 0;
    std::vector<BigInt> inputs;
    BigInt value;
    std::string citation;
};

struct BoundResult {
    Quantity quantity = Quantity::P;
    int n = 0;
    int m = 0;
    BigInt value;
    std::vector<TraceStep> trace;
};

struct SpecialCase {
    BigInt value;
    std::string citation;  // required non-empty
    bool sharp = false;    // sharp table entries can be disabled as a group
};

/// Published special values, keyed by (quantity, n, m). Every entry carries
/// a citation string; entries with empty citations fail the audit.
struct RuleTable {
    std::map<std::tuple<Quantity, int, int>, SpecialCase> special_cases;
    int recursion_depth_limit = 256;

    static RuleTable standard();
    const SpecialCase* find(Quantity q, int n, int m) const;
    bool citations_complete() const;
};

struct DimensionBounds {
    BoundResult total;
    BoundResult compact;
    BoundResult noncompact;
};

struct FullDimBounds {
    BoundResult noncompact;
    BoundResult total;
};

/// Component-count bound dispatcher. All arithmetic is arbitrary precision;
/// the memo table is an idempotent cache guarded for concurrent use.
class BoundEngine {
public:
    struct Options {
        bool use_special_cases = true;  // toggles the sharp entries only
    };

    BoundEngine();
    explicit BoundEngine(Options options);
    BoundEngine(Options options, RuleTable table);

    /// K'(n,m) <= (n+1)^{m-1} 2^{(m-1)(m-2)/2} (Khovanskii).
    BoundResult khovanskii_kprime(int n, int m) const;
    /// Minimum of the table entry for K' and the Khovanskii formula.
    BoundResult kprime_best(int n, int m) const;
    /// Closed form (n+1)^{m-1} 2^{1+(m-1)(m-2)/2} for the component count.
    BoundResult closed_form_bound(int n, int m) const;

    BoundResult p_bound(int n, int m) const;
    BoundResult p_comp_bound(int n, int m) const;
    BoundResult p_non_bound(int n, int m) const;

    /// Bounds valid when the Newton polytope is full-dimensional:
    /// Non <= 2n P(n-1,m-1) and the iterated-slice total. With
    /// sharpen_slices, the per-slice total uses the full-dimensional table
    /// entry for (n-1, m-1) when one exists.
    FullDimBounds fulldim_bounds(int n, int m, bool sharpen_slices = false) const;

    /// Component-count implications of a Newton polytope of dimension d.
    DimensionBounds dimension_dispatch(int n, int m, int d) const;

    const RuleTable& table() const { return table_; }
    const Options& options() const { return options_; }

private:
    BoundResult quantity_bound(Quantity q, int n, int m, int depth) const;
    BoundResult p_impl(int n, int m, int depth) const;
    BoundResult p_comp_impl(int n, int m, int depth) const;
    BoundResult p_non_impl(int n, int m, int depth) const;

    Options options_;
    RuleTable table_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<Quantity, int, int>, BoundResult> memo_;
};

/// Descartes bound for a univariate fewnomial: the sign-change count, with
/// the weaker m-1 cap recorded in the trace.
BoundResult descartes_bound(const Fewnomial& f);

/// Recomputes every trace step from its recorded rule and inputs and checks
/// the final step against the result value.
bool replay_trace(const BoundResult& result, const BoundEngine& engine);

std::string format_trace(const BoundResult& result);

}  // namespace fewnomial
