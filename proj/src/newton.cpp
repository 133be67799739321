#include "fewnomial/newton.hpp"

#include <algorithm>
#include <cmath>

#include "fewnomial/linalg.hpp"

namespace fewnomial {

int newton_dimension(const Fewnomial& f) {
    const auto& terms = f.terms();
    if (terms.size() <= 1) return 0;
    std::vector<Vec> diffs;
    diffs.reserve(terms.size() - 1);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        Vec d(terms[i].exponent.size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = terms[i].exponent[j] - terms[0].exponent[j];
        diffs.push_back(std::move(d));
    }
    return rank_of(std::move(diffs));
}

namespace {

constexpr double kOrientTol = 1e-10;

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Orientation of c relative to the directed line a -> b:
// +1 left turn, -1 right turn, 0 collinear within tolerance.
int orient(const Vec& a, const Vec& b, const Vec& c) {
    double ux = b[0] - a[0], uy = b[1] - a[1];
    double vx = c[0] - a[0], vy = c[1] - a[1];
    double cr = cross(ux, uy, vx, vy);
    double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
    if (std::fabs(cr) <= kOrientTol * scale) return 0;
    return cr > 0 ? 1 : -1;
}

}  // namespace

std::pair<NewtonSummary, QuadClassification> hull_and_classify(const Fewnomial& f) {
    if (f.nvars() != 2)
        raise(Errc::dimension_mismatch, "hull classification needs two variables");

    NewtonSummary summary;
    summary.dimension = newton_dimension(f);

    const auto& terms = f.terms();
    std::vector<int> order(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const Vec& a = terms[static_cast<std::size_t>(i)].exponent;
        const Vec& b = terms[static_cast<std::size_t>(j)].exponent;
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });

    std::vector<int> hull;
    if (terms.size() <= 2 || summary.dimension <= 1) {
        // Degenerate support: hull is the extreme points of the segment.
        hull.push_back(order.front());
        if (order.size() > 1 && order.back() != order.front()) hull.push_back(order.back());
    } else {
        // Monotone chain; collinear points are popped so the vertex list is
        // strictly convex.
        auto build_chain = [&](const std::vector<int>& idx) {
            std::vector<int> chain;
            for (int i : idx) {
                while (chain.size() >= 2 &&
                       orient(terms[static_cast<std::size_t>(chain[chain.size() - 2])].exponent,
                              terms[static_cast<std::size_t>(chain.back())].exponent,
                              terms[static_cast<std::size_t>(i)].exponent) <= 0)
                    chain.pop_back();
                chain.push_back(i);
            }
            return chain;
        };
        std::vector<int> lower = build_chain(order);
        std::vector<int> rev(order.rbegin(), order.rend());
        std::vector<int> upper = build_chain(rev);
        hull = lower;
        hull.insert(hull.end(), upper.begin() + 1, upper.end() - 1);
    }

    std::vector<char> on_hull(terms.size(), 0);
    for (int i : hull) {
        summary.hull_term_indices.push_back(i);
        summary.hull_vertices.push_back(terms[static_cast<std::size_t>(i)].exponent);
        summary.vertex_signs.push_back(terms[static_cast<std::size_t>(i)].coefficient > 0 ? 1 : -1);
        on_hull[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!on_hull[i]) summary.interior_or_edge_points.push_back(terms[i].exponent);

    QuadClassification quad;
    quad.is_quadrilateral = summary.hull_vertices.size() == 4;

    if (quad.is_quadrilateral) {
        const auto& v = summary.hull_vertices;
        for (int k = 0; k < 2; ++k) {
            const Vec& a0 = v[static_cast<std::size_t>(k)];
            const Vec& a1 = v[static_cast<std::size_t>(k + 1)];
            const Vec& b0 = v[static_cast<std::size_t>(k + 2)];
            const Vec& b1 = v[static_cast<std::size_t>((k + 3) % 4)];
            double ex = a1[0] - a0[0], ey = a1[1] - a0[1];
            double fx = b1[0] - b0[0], fy = b1[1] - b0[1];
            if (std::fabs(cross(ex, ey, fx, fy)) <=
                1e-10 * std::hypot(ex, ey) * std::hypot(fx, fy))
                quad.has_parallel_opposite_sides = true;
        }
    }

    if (summary.hull_vertices.size() >= 3) {
        bool alternating = true;
        for (std::size_t k = 0; k < summary.vertex_signs.size(); ++k)
            if (summary.vertex_signs[k] ==
                summary.vertex_signs[(k + 1) % summary.vertex_signs.size()])
                alternating = false;
        quad.adjacent_signs_opposite = alternating;
    }

    int positives = 0, negatives = 0;
    for (const Term& t : terms) (t.coefficient > 0 ? positives : negatives)++;
    quad.equiv_hypotheses_met = quad.is_quadrilateral && !quad.has_parallel_opposite_sides &&
                                quad.adjacent_signs_opposite && positives == 2 && negatives == 2;

    return {std::move(summary), quad};
}

}  // namespace fewnomial
