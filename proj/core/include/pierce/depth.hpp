#pragma once

#include <optional>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

// Edges are (d+1)-subsets of point indices, sorted ascending.
using EdgeList = std::vector<std::vector<int>>;

struct DepthResult {
    Point point;
    long long pierced_count = 0;
    // Which edges (or colorful tuples, by lexicographic rank) contain the
    // point; always an exact recount at `point`.
    std::optional<std::vector<int>> pierced_indices;
};

// Exact maximum over x of the number of open simplices from `edges` that
// contain x. The depth function is constant on the open cells of the
// arrangement of all hyperplanes spanned by d-subsets of the points, and
// every positive-depth cell is bounded, so one interior representative per
// bounded cell suffices.
DepthResult brute_force_deepest(const PointSet& points, const EdgeList& edges, int threads = 1);

// Exact maximum over x of the number of closed colorful simplices (one
// vertex per class) containing x. For closed simplices the maximum is
// attained at a vertex of the arrangement of spanning hyperplanes, so the
// candidates are those vertices plus the input points. The result is always
// at least ceil(prod |P_i| / (d+1)!).
DepthResult colorful_deepest(const std::vector<PointSet>& classes, int threads = 1);

}  // namespace pierce
