#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

struct PartitionPart {
    std::vector<int> indices;  // sorted point indices; empty for dummy parts
    Simplex cell;              // full-dimensional cell; part points lie in its open interior
};

// Simplicial r-partition: disjoint index cover, every nonempty part within
// the size window [ceil(n/r), 2*ceil(n/r)), each part strictly inside its
// cell. Empty parts carry tiny dummy cells far outside the data.
struct SimplicialPartition {
    int dimension = 0;
    int r = 0;  // requested part count; parts.size() == r
    std::vector<PartitionPart> parts;
    PointSet source;
    // True when the joint genericity of all cell vertices was verified by a
    // full orientation scan; large instances skip the scan (the seeded
    // perturbation makes violations vanishingly unlikely, and downstream
    // classification fails loudly on any that remain).
    bool cells_verified_generic = false;

    int nonempty_count() const;
    // part_of[i] = index of the part containing point i.
    std::vector<int> point_to_part() const;
};

SimplicialPartition build_partition(const PointSet& points, int r, std::uint64_t seed);

struct CrossingProfile {
    int probes = 0;
    std::vector<int> histogram;  // histogram[c] = number of probes crossing exactly c cells
    int maximum = 0;
};

// A hyperplane crosses a cell when it meets the cell's open interior: both
// strict sides occur among the cell's vertices.
bool hyperplane_crosses_cell(const OrientedHyperplane& h, const Simplex& cell);

CrossingProfile crossing_profile(const SimplicialPartition& partition,
                                 const std::vector<OrientedHyperplane>& probes);

// Auto probes: half are spanning hyperplanes of random d-subsets of the
// source points, half have random normals through a random point of the
// data's bounding box.
CrossingProfile crossing_profile_auto(const SimplicialPartition& partition, int count,
                                      std::uint64_t seed);

}  // namespace pierce
