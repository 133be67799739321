#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fewnomial/core.hpp"
#include "fewnomial/transform.hpp"

namespace fewnomial {

/// Sampling window [-W, W]^n in log coordinates. Resolution is cells per
/// axis and must be a power of two, at least 16.
struct GridSpec {
    double half_width = 12.0;
    int resolution = 512;
    int max_doublings = 4;
};

void validate(const GridSpec& grid);

struct Contour {
    int component = 0;
    bool compact = false;
    std::vector<std::array<double, 2>> points;  // log coordinates
};

/// Connected-component counts of a zero set in the positive orthant.
/// Compact means bounded in log coordinates; a component is classified
/// non-compact when it reaches the boundary of the sampling window.
struct Census {
    int tot = 0;
    int comp = 0;
    int non = 0;
    bool converged = false;
    GridSpec window_used;
    std::vector<Contour> contours;
};

struct RootBracket {
    double lo = 0.0;   // log coordinate
    double hi = 0.0;
    bool sign_flip = false;
};

struct RootScan {
    std::vector<RootBracket> brackets;
    /// False when more brackets were found than the Descartes ceiling
    /// allows, which marks the scan as not certified.
    bool within_descartes = true;
};

RootScan isolate_roots_1d(const Fewnomial& f, const GridSpec& grid);

struct CensusOptions {
    bool contours = true;
    /// Verified critical zeros of f (log coordinates). Crossings within a
    /// couple of cells of such a point are merged into one component: the
    /// zero set passes through the point, but a sign census cannot see the
    /// connection on its own.
    std::vector<LogPoint> merge_points;
};

/// Single-round marching-squares census of a bivariate fewnomial.
Census census_grid(const Fewnomial& f, const GridSpec& grid, const CensusOptions& options = {});

/// Repeats census_grid, doubling window and resolution, until the counts
/// (tot, comp, non) agree across two successive doublings or the doubling
/// budget is exhausted. Convergence is heuristic, never a certificate.
Census census_stabilized(const Fewnomial& f, const GridSpec& initial, const CensusOptions& options = {});

struct SliceCensus {
    int upper_estimate = 0;  // sum of slice totals; empirical bound on Non
    SliceFamily family;
    std::vector<Census> slice_censuses;
};

/// Slice harness for a trivariate fewnomial with full-dimensional support:
/// fixes each variable at the window bounds and sums the 2n slice totals.
SliceCensus noncompact_census_3d(const Fewnomial& f, const GridSpec& grid);

/// Multistart descent on |f|^2 + |grad f|^2 over the log window. Returns a
/// point where both residuals are below 1e-8, if any start converges.
std::optional<PositivePoint> critical_zero_search(const Fewnomial& f, const GridSpec& grid);

}  // namespace fewnomial
