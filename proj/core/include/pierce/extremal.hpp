#pragma once

#include <utility>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

// Exhaustive halving-simplex enumeration: one entry per d-subset whose
// spanning hyperplane leaves at most ceil((n-d)/2) of the remaining points
// strictly on each side.
struct HalvingReport {
    int n = 0;
    int d = 0;
    long long count = 0;
    std::vector<std::vector<int>> subsets;         // sorted, in lexicographic order
    std::vector<std::pair<int, int>> side_counts;  // (positive, negative) per subset
};

// Builds the spanning hyperplane of every d-subset and counts the strict
// sides exactly via orientation signs. A zero orientation (some point on a
// spanning hyperplane, or a degenerate subset) raises DegenerateVertices;
// fewer than d points raises TooFewPoints.
HalvingReport halving_count(const PointSet& points);

// Exhaustive k-set enumeration: one entry per k-subset that an open
// halfspace cuts out of the point set.
struct KSetReport {
    int n = 0;
    int d = 0;
    int k = 0;
    long long count = 0;
    std::vector<std::vector<int>> subsets;  // sorted, in lexicographic order
};

// Decides strict linear separability of every k-subset from its complement
// by exact feasibility (a, b with a·s > b on the subset and a·p < b off it).
// Requires 1 <= k <= n (InvalidK otherwise).
KSetReport kset_count(const PointSet& points, int k, int threads = 1);

}  // namespace pierce
