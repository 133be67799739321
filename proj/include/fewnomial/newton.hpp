#pragma once

#include <vector>

#include "fewnomial/core.hpp"

namespace fewnomial {

/// Newton polytope data. Hull fields are populated only for two variables;
/// in higher dimension only the rank is needed.
struct NewtonSummary {
    int dimension = 0;
    std::vector<Vec> hull_vertices;            // counter-clockwise, strictly convex
    std::vector<int> hull_term_indices;        // term index per hull vertex
    std::vector<int> vertex_signs;             // coefficient sign per hull vertex
    std::vector<Vec> interior_or_edge_points;  // support points that are not vertices
};

/// Hypotheses of the bivariate 4-nomial normalization, read off the hull.
struct QuadClassification {
    bool is_quadrilateral = false;
    bool has_parallel_opposite_sides = false;
    bool adjacent_signs_opposite = false;
    bool equiv_hypotheses_met = false;
};

/// Dimension of the smallest translated linear subspace containing the
/// exponent vectors: the rank of {a_i - a_1}.
int newton_dimension(const Fewnomial& f);

std::pair<NewtonSummary, QuadClassification> hull_and_classify(const Fewnomial& f);

}  // namespace fewnomial
