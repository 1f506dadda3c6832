#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pierce/census.hpp"
#include "pierce/constants.hpp"
#include "pierce/depth.hpp"

namespace pierce {

enum class SelectionCase { tight_pigeonhole, recurse_ambient, oracle_base };

const char* selection_case_name(SelectionCase action) noexcept;

struct SelectionLevel {
    int n = 0;
    long long edge_count = 0;
    int r = 0;  // zero at the oracle base, where no partition is built
    TupleCensus census;
    SelectionCase action = SelectionCase::oracle_base;
    // The tight family driving a pigeonhole step, or the ambient group whose
    // parts form the next level's point set; empty at the base.
    std::vector<int> chosen_cells;
};

struct SelectionTrace {
    std::vector<SelectionLevel> levels;
};

struct SelectionOptions {
    // Partition granularity; when absent, each level derives
    // r = ceil(c * (C(n,d+1)/|E|)^(d^4+d)) from its own edge density, capped
    // at that level's n.
    std::optional<int> r;
    // Recursion bottoms out at n <= base_threshold via the brute-force
    // oracle; defaults from the constants record in d=2, required in d=3.
    std::optional<int> base_threshold;
    int threads = 1;
    ToolkitConstants constants = default_constants();
};

// Piercing point selection: census the edges over a simplicial partition;
// when tight-ambient edges carry at least half the mass, return the centroid
// of the heaviest tight family's intersection cell, otherwise recurse on the
// most-loaded ambient group. The reported count is an exact recount of the
// full input edge set at the returned point.
std::pair<DepthResult, SelectionTrace> select_point(const PointSet& points, const EdgeList& edges,
                                                    std::uint64_t seed,
                                                    const SelectionOptions& options = {});

}  // namespace pierce
