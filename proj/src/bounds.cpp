#include "fewnomial/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace fewnomial {

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::P: return "P";
        case Quantity::PComp: return "Pcomp";
        case Quantity::PNon: return "Pnon";
        case Quantity::KPrime: return "Kprime";
        case Quantity::NonFullDim: return "NonFulldim";
        case Quantity::TotFullDim: return "TotFulldim";
    }
    return "?";
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
    for (Quantity q : {Quantity::P, Quantity::PComp, Quantity::PNon, Quantity::KPrime,
                       Quantity::NonFullDim, Quantity::TotFullDim})
        if (name == quantity_name(q)) return q;
    return std::nullopt;
}

namespace {

void validate_args(int n, int m) {
    if (n < 1 || m < 1) raise(Errc::invalid_argument, "n and m must be positive");
    if (n > 1000 || m > 1000)
        raise(Errc::invalid_argument, "n or m exceeds the big-integer budget");
}

BigInt khovanskii_value(int n, int m) {
    unsigned e2 = static_cast<unsigned>(m - 1) * static_cast<unsigned>(m - 2) / 2;
    return pow(BigInt(n + 1), static_cast<unsigned>(m - 1)) * pow(BigInt(2), e2);
}

BigInt closed_value(int n, int m) {
    unsigned e2 = 1 + static_cast<unsigned>(m - 1) * static_cast<unsigned>(m - 2) / 2;
    return pow(BigInt(n + 1), static_cast<unsigned>(m - 1)) * pow(BigInt(2), e2);
}

BigInt falling_factorial(int n, int i) {
    BigInt v = 1;
    for (int k = 0; k < i; ++k) v *= n - k;
    return v;
}

BigInt iterated_slice_value(int n, const std::vector<BigInt>& comps) {
    BigInt total = 0;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        total += pow(BigInt(2), static_cast<unsigned>(i)) * falling_factorial(n, i) *
                 comps[static_cast<std::size_t>(i)];
    return total;
}

struct Candidate {
    BigInt value;
    std::vector<TraceStep> trace;
};

// The later candidate wins only when strictly smaller, so rule order breaks
// ties deterministically.
void keep_min(std::optional<Candidate>& best, Candidate cand) {
    if (!best || cand.value < best->value) best = std::move(cand);
}

TraceStep make_step(Quantity q, std::string rule, int n, int m, std::vector<BigInt> inputs,
                    BigInt value, std::string citation) {
    TraceStep s;
    s.quantity = q;
    s.rule = std::move(rule);
    s.n = n;
    s.m = m;
    s.inputs = std::move(inputs);
    s.value = std::move(value);
    s.citation = std::move(citation);
    return s;
}

BoundResult finish(Quantity q, int n, int m, Candidate best) {
    BoundResult r;
    r.quantity = q;
    r.n = n;
    r.m = m;
    r.value = best.value;
    r.trace = std::move(best.trace);
    return r;
}

constexpr const char* kCiteKhovanskii =
    "Khovanskii: K'(n,m) <= (n+1)^(m-1) 2^((m-1)(m-2)/2)";
constexpr const char* kCiteClosed =
    "component count <= (n+1)^(m-1) 2^(1+(m-1)(m-2)/2)";
constexpr const char* kCiteDescartes = "Descartes: at most m-1 positive roots";
constexpr const char* kCiteTwoTerm = "at most m-1 components when m <= 2";
constexpr const char* kCiteCap = "P(n,m) = P(m-2,m) once n >= m-2";
constexpr const char* kCiteEvenKprime =
    "Li-Rojas-Wang: P_comp(n,m) <= 2 floor(K'(n,m)/2)";
constexpr const char* kCiteDouble = "Li-Rojas-Wang: P_non(n,m) <= 2 P(n-1,m)";
constexpr const char* kCiteSum = "P <= P_comp + P_non";
constexpr const char* kCiteSlices = "Non <= 2n P(n-1,m-1) for full-dimensional support";
constexpr const char* kCiteSlicesRefined =
    "Non <= 2n * (sharp slice total) for full-dimensional support";
constexpr const char* kCiteIterated =
    "Tot <= sum_i 2^i n!/(n-i)! P_comp(n-i,m-i) for full-dimensional support";
constexpr const char* kCiteLowDim = "Comp = 0 and Non <= P(d,m) when dim Newt <= n-1";
constexpr const char* kCiteSimplex = "Comp = 0 and Non <= 1 when dim Newt = m-1";
constexpr const char* kCitePoint = "a single monomial never vanishes on the orthant";

}  // namespace

RuleTable RuleTable::standard() {
    RuleTable t;
    t.special_cases[{Quantity::KPrime, 2, 4}] =
        SpecialCase{BigInt(5), "K'(2,4) <= 5 (Li-Rojas-Wang)", false};
    t.special_cases[{Quantity::P, 2, 4}] = SpecialCase{
        BigInt(3), "sharp: a bivariate 4-nomial zero set has at most 3 components", true};
    t.special_cases[{Quantity::PComp, 2, 4}] = SpecialCase{
        BigInt(1), "sharp: a bivariate 4-nomial zero set has at most 1 compact component", true};
    t.special_cases[{Quantity::PNon, 2, 4}] = SpecialCase{
        BigInt(3), "sharp: a bivariate 4-nomial zero set has at most 3 non-compact components",
        true};
    t.special_cases[{Quantity::TotFullDim, 2, 4}] = SpecialCase{
        BigInt(2), "full-dimensional bivariate 4-nomials: at most 2 components", true};
    t.special_cases[{Quantity::NonFullDim, 3, 5}] = SpecialCase{
        BigInt(12),
        "full-dimensional trivariate 5-nomials: at most 12 non-compact components", true};
    return t;
}

const SpecialCase* RuleTable::find(Quantity q, int n, int m) const {
    auto it = special_cases.find({q, n, m});
    return it == special_cases.end() ? nullptr : &it->second;
}

bool RuleTable::citations_complete() const {
    for (const auto& [key, entry] : special_cases)
        if (entry.citation.empty()) return false;
    return true;
}

BoundEngine::BoundEngine() : BoundEngine(Options{}) {}

BoundEngine::BoundEngine(Options options) : options_(options), table_(RuleTable::standard()) {}

BoundEngine::BoundEngine(Options options, RuleTable table)
    : options_(options), table_(std::move(table)) {}

BoundResult BoundEngine::khovanskii_kprime(int n, int m) const {
    validate_args(n, m);
    BigInt v = khovanskii_value(n, m);
    Candidate c{v, {make_step(Quantity::KPrime, "khovanskii", n, m, {}, v, kCiteKhovanskii)}};
    return finish(Quantity::KPrime, n, m, std::move(c));
}

BoundResult BoundEngine::closed_form_bound(int n, int m) const {
    validate_args(n, m);
    BigInt v = closed_value(n, m);
    Candidate c{v, {make_step(Quantity::P, "closed-form", n, m, {}, v, kCiteClosed)}};
    return finish(Quantity::P, n, m, std::move(c));
}

BoundResult BoundEngine::kprime_best(int n, int m) const {
    validate_args(n, m);
    std::optional<Candidate> best;
    if (const SpecialCase* sc = table_.find(Quantity::KPrime, n, m);
        sc && (!sc->sharp || options_.use_special_cases))
        keep_min(best, Candidate{sc->value, {make_step(Quantity::KPrime, "table", n, m, {},
                                                       sc->value, sc->citation)}});
    BigInt kv = khovanskii_value(n, m);
    keep_min(best, Candidate{kv, {make_step(Quantity::KPrime, "khovanskii", n, m, {}, kv,
                                            kCiteKhovanskii)}});
    return finish(Quantity::KPrime, n, m, std::move(*best));
}

BoundResult BoundEngine::p_bound(int n, int m) const {
    validate_args(n, m);
    return quantity_bound(Quantity::P, n, m, 0);
}

BoundResult BoundEngine::p_comp_bound(int n, int m) const {
    validate_args(n, m);
    return quantity_bound(Quantity::PComp, n, m, 0);
}

BoundResult BoundEngine::p_non_bound(int n, int m) const {
    validate_args(n, m);
    return quantity_bound(Quantity::PNon, n, m, 0);
}

BoundResult BoundEngine::quantity_bound(Quantity q, int n, int m, int depth) const {
    if (depth > table_.recursion_depth_limit)
        raise(Errc::invalid_argument, "bound recursion exceeded its depth limit");

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({q, n, m});
        if (it != memo_.end()) return it->second;
    }

    BoundResult r;
    switch (q) {
        case Quantity::P: r = p_impl(n, m, depth); break;
        case Quantity::PComp: r = p_comp_impl(n, m, depth); break;
        case Quantity::PNon: r = p_non_impl(n, m, depth); break;
        default: raise(Errc::invalid_argument, "dispatcher handles P, Pcomp, Pnon only");
    }

    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(std::make_tuple(q, n, m), r);
    (void)inserted;  // losing the race is fine: the values are identical
    return it->second;
}

BoundResult BoundEngine::p_impl(int n, int m, int depth) const {
    if (m <= 2) {
        BigInt v = m - 1;
        return finish(Quantity::P, n, m,
                      Candidate{v, {make_step(Quantity::P, "two-term-base", n, m, {}, v,
                                              kCiteTwoTerm)}});
    }
    if (n > m - 2) {
        // A fewnomial in more variables than its support can span reduces to
        // the m-2 variable case, so the cap is an equality for the maxima.
        BoundResult child = quantity_bound(Quantity::P, m - 2, m, depth + 1);
        Candidate c{child.value, child.trace};
        c.trace.push_back(make_step(Quantity::P, "variable-cap", n, m, {child.value},
                                    child.value, kCiteCap));
        return finish(Quantity::P, n, m, std::move(c));
    }

    std::optional<Candidate> best;
    if (options_.use_special_cases)
        if (const SpecialCase* sc = table_.find(Quantity::P, n, m))
            keep_min(best, Candidate{sc->value, {make_step(Quantity::P, "table", n, m, {},
                                                           sc->value, sc->citation)}});
    if (n == 1) {
        BigInt v = m - 1;
        keep_min(best, Candidate{v, {make_step(Quantity::P, "descartes-base", n, m, {}, v,
                                               kCiteDescartes)}});
    }
    {
        BoundResult comp = quantity_bound(Quantity::PComp, n, m, depth + 1);
        BoundResult non = quantity_bound(Quantity::PNon, n, m, depth + 1);
        Candidate c{comp.value + non.value, comp.trace};
        c.trace.insert(c.trace.end(), non.trace.begin(), non.trace.end());
        c.trace.push_back(make_step(Quantity::P, "comp-plus-non", n, m,
                                    {comp.value, non.value}, c.value, kCiteSum));
        keep_min(best, std::move(c));
    }
    {
        BigInt v = closed_value(n, m);
        keep_min(best, Candidate{v, {make_step(Quantity::P, "closed-form", n, m, {}, v,
                                               kCiteClosed)}});
    }
    return finish(Quantity::P, n, m, std::move(*best));
}

BoundResult BoundEngine::p_comp_impl(int n, int m, int depth) const {
    (void)depth;
    std::optional<Candidate> best;
    if (options_.use_special_cases)
        if (const SpecialCase* sc = table_.find(Quantity::PComp, n, m))
            keep_min(best, Candidate{sc->value, {make_step(Quantity::PComp, "table", n, m, {},
                                                           sc->value, sc->citation)}});
    if (m <= 2) {
        BigInt v = m - 1;
        keep_min(best, Candidate{v, {make_step(Quantity::PComp, "two-term-base", n, m, {}, v,
                                               kCiteTwoTerm)}});
    }
    if (n == 1) {
        BigInt v = m - 1;
        keep_min(best, Candidate{v, {make_step(Quantity::PComp, "descartes-base", n, m, {}, v,
                                               kCiteDescartes)}});
    }
    {
        BoundResult k = kprime_best(n, m);
        BigInt v = 2 * (k.value / 2);
        Candidate c{v, k.trace};
        c.trace.push_back(make_step(Quantity::PComp, "even-kprime", n, m, {k.value}, v,
                                    kCiteEvenKprime));
        keep_min(best, std::move(c));
    }
    return finish(Quantity::PComp, n, m, std::move(*best));
}

BoundResult BoundEngine::p_non_impl(int n, int m, int depth) const {
    std::optional<Candidate> best;
    if (options_.use_special_cases)
        if (const SpecialCase* sc = table_.find(Quantity::PNon, n, m))
            keep_min(best, Candidate{sc->value, {make_step(Quantity::PNon, "table", n, m, {},
                                                           sc->value, sc->citation)}});
    if (m <= 2) {
        BigInt v = m - 1;
        keep_min(best, Candidate{v, {make_step(Quantity::PNon, "two-term-base", n, m, {}, v,
                                               kCiteTwoTerm)}});
    }
    if (n == 1) {
        BigInt v = m - 1;
        keep_min(best, Candidate{v, {make_step(Quantity::PNon, "descartes-base", n, m, {}, v,
                                               kCiteDescartes)}});
    }
    if (n >= 2) {
        BoundResult lower = quantity_bound(Quantity::P, n - 1, m, depth + 1);
        BigInt v = 2 * lower.value;
        Candidate c{v, lower.trace};
        c.trace.push_back(make_step(Quantity::PNon, "double-lower-dim", n, m, {lower.value}, v,
                                    kCiteDouble));
        keep_min(best, std::move(c));
    }
    return finish(Quantity::PNon, n, m, std::move(*best));
}

FullDimBounds BoundEngine::fulldim_bounds(int n, int m, bool sharpen_slices) const {
    validate_args(n, m);
    if (n < 2) raise(Errc::invalid_argument, "full-dimensional bounds need n >= 2");
    if (m < n + 1)
        raise(Errc::invalid_argument, "full-dimensional support needs at least n+1 terms");

    FullDimBounds out;

    BoundResult slice = quantity_bound(Quantity::P, n - 1, m - 1, 0);
    BigInt per_slice = slice.value;
    std::vector<TraceStep> non_trace = slice.trace;
    std::string rule = "slice-count";
    std::string cite = kCiteSlices;
    if (sharpen_slices) {
        if (const SpecialCase* sc = table_.find(Quantity::TotFullDim, n - 1, m - 1);
            sc && (!sc->sharp || options_.use_special_cases) && sc->value < per_slice) {
            per_slice = sc->value;
            non_trace.push_back(make_step(Quantity::TotFullDim, "table", n - 1, m - 1, {},
                                          sc->value, sc->citation));
            rule = "slice-count-refined";
            cite = kCiteSlicesRefined;
        }
    }
    BigInt non_value = 2 * BigInt(n) * per_slice;
    non_trace.push_back(
        make_step(Quantity::NonFullDim, rule, n, m, {per_slice}, non_value, cite));
    out.noncompact = finish(Quantity::NonFullDim, n, m, Candidate{non_value, std::move(non_trace)});

    std::vector<BigInt> comps;
    std::vector<TraceStep> tot_trace;
    for (int i = 0; i <= n - 1; ++i) {
        BoundResult pc = quantity_bound(Quantity::PComp, n - i, m - i, 0);
        comps.push_back(pc.value);
        tot_trace.insert(tot_trace.end(), pc.trace.begin(), pc.trace.end());
    }
    BigInt tot_value = iterated_slice_value(n, comps);
    tot_trace.push_back(
        make_step(Quantity::TotFullDim, "iterated-slices", n, m, comps, tot_value, kCiteIterated));
    out.total = finish(Quantity::TotFullDim, n, m, Candidate{tot_value, std::move(tot_trace)});
    return out;
}

DimensionBounds BoundEngine::dimension_dispatch(int n, int m, int d) const {
    validate_args(n, m);
    if (d < 0 || d > std::min(m - 1, n))
        raise(Errc::invalid_argument, "dimension must lie in [0, min(m-1, n)]");

    DimensionBounds out;
    auto constant = [&](Quantity q, const char* rule, BigInt v, const char* cite) {
        return finish(q, n, m, Candidate{v, {make_step(q, rule, n, m, {}, v, cite)}});
    };

    if (d == 0) {
        out.total = constant(Quantity::P, "point-support", 0, kCitePoint);
        out.compact = constant(Quantity::PComp, "point-support", 0, kCitePoint);
        out.noncompact = constant(Quantity::PNon, "point-support", 0, kCitePoint);
        return out;
    }
    if (d == m - 1) {
        out.compact = constant(Quantity::PComp, "simplex-support", 0, kCiteSimplex);
        out.noncompact = constant(Quantity::PNon, "simplex-support", 1, kCiteSimplex);
        out.total = constant(Quantity::P, "simplex-support", 1, kCiteSimplex);
        return out;
    }
    if (d <= n - 1) {
        BoundResult pd = quantity_bound(Quantity::P, d, m, 0);
        out.compact = constant(Quantity::PComp, "low-dim-factor", 0, kCiteLowDim);
        Candidate non{pd.value, pd.trace};
        non.trace.push_back(make_step(Quantity::PNon, "low-dim-factor", n, m, {pd.value},
                                      pd.value, kCiteLowDim));
        out.noncompact = finish(Quantity::PNon, n, m, std::move(non));
        Candidate tot{pd.value, pd.trace};
        tot.trace.push_back(make_step(Quantity::P, "low-dim-factor", n, m, {pd.value}, pd.value,
                                      kCiteLowDim));
        out.total = finish(Quantity::P, n, m, std::move(tot));
        return out;
    }

    // d == n < m-1: the support is full-dimensional.
    out.compact = quantity_bound(Quantity::PComp, n, m, 0);

    std::optional<Candidate> non;
    {
        BoundResult pn = quantity_bound(Quantity::PNon, n, m, 0);
        keep_min(non, Candidate{pn.value, pn.trace});
    }
    if (n >= 2) {
        BoundResult slice = quantity_bound(Quantity::P, n - 1, m - 1, 0);
        BigInt v = 2 * BigInt(n) * slice.value;
        Candidate c{v, slice.trace};
        c.trace.push_back(
            make_step(Quantity::NonFullDim, "slice-count", n, m, {slice.value}, v, kCiteSlices));
        keep_min(non, std::move(c));
    }
    if (const SpecialCase* sc = table_.find(Quantity::NonFullDim, n, m);
        sc && (!sc->sharp || options_.use_special_cases))
        keep_min(non, Candidate{sc->value, {make_step(Quantity::NonFullDim, "table", n, m, {},
                                                      sc->value, sc->citation)}});
    out.noncompact = finish(Quantity::NonFullDim, n, m, std::move(*non));

    std::optional<Candidate> tot;
    {
        BoundResult pt = quantity_bound(Quantity::P, n, m, 0);
        keep_min(tot, Candidate{pt.value, pt.trace});
    }
    if (const SpecialCase* sc = table_.find(Quantity::TotFullDim, n, m);
        sc && (!sc->sharp || options_.use_special_cases))
        keep_min(tot, Candidate{sc->value, {make_step(Quantity::TotFullDim, "table", n, m, {},
                                                      sc->value, sc->citation)}});
    {
        Candidate c{out.compact.value + out.noncompact.value, {}};
        c.trace = out.compact.trace;
        c.trace.insert(c.trace.end(), out.noncompact.trace.begin(), out.noncompact.trace.end());
        c.trace.push_back(make_step(Quantity::TotFullDim, "comp-plus-non", n, m,
                                    {out.compact.value, out.noncompact.value}, c.value, kCiteSum));
        keep_min(tot, std::move(c));
    }
    out.total = finish(Quantity::TotFullDim, n, m, std::move(*tot));
    return out;
}

BoundResult descartes_bound(const Fewnomial& f) {
    int changes = sign_changes(f);  // throws when not univariate
    int m = f.term_count();
    BoundResult r;
    r.quantity = Quantity::P;
    r.n = 1;
    r.m = m;
    r.value = changes;
    r.trace.push_back(make_step(Quantity::P, "descartes-base", 1, m, {}, BigInt(m - 1),
                                kCiteDescartes));
    r.trace.push_back(make_step(Quantity::P, "descartes-sign-changes", 1, m, {BigInt(changes)},
                                BigInt(changes),
                                "positive roots <= sign changes of the ordered coefficients"));
    return r;
}

namespace {

std::optional<BigInt> replay_step(const TraceStep& s, const BoundEngine& engine) {
    const int n = s.n, m = s.m;
    const auto& in = s.inputs;
    auto need = [&](std::size_t k) { return in.size() >= k; };

    if (s.rule == "khovanskii") return khovanskii_value(n, m);
    if (s.rule == "closed-form") return closed_value(n, m);
    if (s.rule == "descartes-base" || s.rule == "two-term-base") return BigInt(m - 1);
    if (s.rule == "variable-cap" || s.rule == "low-dim-factor" ||
        s.rule == "descartes-sign-changes")
        return need(1) ? std::optional<BigInt>(in[0]) : std::nullopt;
    if (s.rule == "even-kprime") return need(1) ? std::optional<BigInt>(2 * (in[0] / 2)) : std::nullopt;
    if (s.rule == "double-lower-dim") return need(1) ? std::optional<BigInt>(2 * in[0]) : std::nullopt;
    if (s.rule == "comp-plus-non") return need(2) ? std::optional<BigInt>(in[0] + in[1]) : std::nullopt;
    if (s.rule == "slice-count" || s.rule == "slice-count-refined")
        return need(1) ? std::optional<BigInt>(2 * BigInt(n) * in[0]) : std::nullopt;
    if (s.rule == "iterated-slices") return iterated_slice_value(n, in);
    if (s.rule == "simplex-support") return s.quantity == Quantity::PComp ? BigInt(0) : BigInt(1);
    if (s.rule == "point-support") return BigInt(0);
    if (s.rule == "table") {
        const SpecialCase* sc = engine.table().find(s.quantity, n, m);
        if (!sc) return std::nullopt;
        return sc->value;
    }
    return std::nullopt;
}

}  // namespace

bool replay_trace(const BoundResult& result, const BoundEngine& engine) {
    if (result.trace.empty()) return false;
    for (const TraceStep& s : result.trace) {
        // low-dim-factor steps with no inputs encode a constant zero.
        if (s.rule == "low-dim-factor" && s.inputs.empty()) {
            if (s.value != 0) return false;
            continue;
        }
        auto v = replay_step(s, engine);
        if (!v || *v != s.value) return false;
    }
    return result.trace.back().value == result.value;
}

std::string format_trace(const BoundResult& result) {
    std::ostringstream os;
    for (const TraceStep& s : result.trace) {
        os << "  " << quantity_name(s.quantity) << "(" << s.n << "," << s.m << ")";
        os << " <= " << s.value << "  via " << s.rule;
        if (!s.inputs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < s.inputs.size(); ++i) {
                if (i) os << ", ";
                os << s.inputs[i];
            }
            os << "]";
        }
        if (!s.citation.empty()) os << "  -- " << s.citation;
        os << "\n";
    }
    os << quantity_name(result.quantity) << "(" << result.n << "," << result.m
       << ") = " << result.value << "\n";
    return os.str();
}

}  // namespace fewnomial
