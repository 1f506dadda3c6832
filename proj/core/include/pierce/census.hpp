#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pierce/constants.hpp"
#include "pierce/family.hpp"
#include "pierce/partition.hpp"

namespace pierce {

// Edges are (d+1)-subsets of point indices, sorted ascending.
using EdgeList = std::vector<std::vector<int>>;

enum class EdgeKind { crowded, crossed_ambient, loose_ambient, tight_ambient };

struct TupleCensus {
    int r_nonempty = 0;
    // Tuple counts over (d+1)-subsets of distinct nonempty cells; they sum to
    // C(r_nonempty, d+1) exactly.
    long long crossed = 0;
    long long loose = 0;
    long long tight = 0;

    bool has_edges = false;
    long long crowded = 0;
    long long crossed_ambient = 0;
    long long loose_ambient = 0;
    long long tight_ambient = 0;

    // Tight family carrying the most edges (lexicographically least among
    // ties); absent when no edges were supplied or no tight tuple exists.
    std::optional<std::vector<int>> heaviest_tight_cells;
    long long heaviest_tight_load = 0;
};

struct CensusResult {
    TupleCensus summary;
    // Classification memo keyed by sorted nonempty-part index tuples.
    std::map<std::vector<int>, FamilyClass> tuple_class;
    std::vector<EdgeKind> edge_kinds;                  // one entry per edge
    std::vector<std::vector<int>> edge_ambient_cells;  // sorted distinct owner parts per edge
};

// The family whose members are the cells of the given parts.
Family family_of_cells(const SimplicialPartition& partition, const std::vector<int>& parts);

// Classifies every (d+1)-subset of distinct nonempty cells, then assigns each
// edge either to the crowded class (fewer than d+1 distinct owner cells) or
// to its ambient family's class.
CensusResult tuple_census(const SimplicialPartition& partition,
                          const std::optional<EdgeList>& edges);

struct ColoredCensus {
    std::vector<SimplicialPartition> partitions;  // one per color class
    long long crossed = 0;
    long long loose = 0;
    long long tight = 0;
    // Each tight tuple: one nonempty-part index per color, into the
    // corresponding partition's parts array.
    std::vector<std::vector<int>> tight_tuples;
};

// Builds one partition per color (classes smaller than r fall back to
// singleton parts) and classifies every cross-product tuple of nonempty
// cells, one cell per color.
ColoredCensus colored_tuple_census(const std::vector<PointSet>& colors, int r,
                                   std::uint64_t seed);

struct SameTypeResult {
    std::vector<std::vector<int>> subsets;  // k point-index lists into the source set
    // Orientation sign per (d+1)-subsequence of the returned subsets, in
    // lexicographic order of subset index combinations.
    std::vector<int> order_type;
    std::vector<int> chosen_parts;  // the partition parts behind the subsets
    int r_used = 0;
};

// Extracts k subsets every transversal tuple of which has the same
// orientation vector: builds a partition, forms the homogeneity hypergraph
// of part tuples with separated cells, and searches for a complete
// homogeneous k-clique.
SameTypeResult same_type_extract(const PointSet& points, int k, std::optional<int> r_override,
                                 std::uint64_t seed,
                                 const ToolkitConstants& constants = default_constants());

}  // namespace pierce
