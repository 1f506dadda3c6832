#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pierce/constants.hpp"
#include "pierce/geometry.hpp"
#include "pierce/rational.hpp"
#include "pierce/relation.hpp"

namespace pierce {

// Bipartite semi-algebraic graph: (v1[i], v2[j]) is an edge exactly when the
// two-block relation holds on the pair.
struct BipartiteInstance {
    PointSet v1;
    PointSet v2;
    SemiAlgRelation relation;
};

// A complete product block W_1 x ... x W_k inside a k-partite edge set.
struct TuranBlock {
    std::vector<std::vector<int>> subsets;   // W_i as sorted indices into class i
    bool complete = false;                   // true only after the exhaustive product scan
    long long size_product = 0;              // prod |W_i|
    std::optional<std::string> region_note;  // the region whose trace on the last class is W_k
    bool mnet_cover_verified = true;         // false when a covering check had to be waived
};

// Greedy maximal packing in input order: a hyperedge is kept exactly when
// its symmetric difference with every previously kept edge exceeds
// delta * ground_size. Returns indices of kept edges; maximality (every
// input edge close to some kept one) is re-verified exhaustively.
std::vector<int> maximal_packing(int ground_size, const std::vector<std::vector<int>>& hyperedges,
                                 const Rational& delta);

// One Mnet element: a subset of the right class together with a description
// of the region that cuts it out.
struct MnetElement {
    std::vector<int> members;  // sorted indices into V2
    std::string region;
};

struct MnetResult {
    std::vector<MnetElement> elements;
    bool cover_verified = false;   // every large restricted hyperedge contains an element
    bool used_singletons = false;  // fell back to one element per point of rho
    int r_used = 0;                // partition resolution of the final attempt
};

// Elements inside one packing edge rho. Large hyperedges (at least
// mnet_large_edge_fraction * eps_i * |V2| of their vertices inside rho) must
// contain an element; the check runs against the supplied hyperedges and a
// failure triggers one retry at doubled resolution before being reported.
MnetResult build_mnet(const PointSet& v2, const std::vector<int>& rho,
                      const std::vector<std::vector<int>>& hyperedges, const Rational& eps_i,
                      int r, std::uint64_t seed,
                      const ToolkitConstants& constants = default_constants());

// Complete bipartite block of size product Omega(eps^(d1+1) |V1| |V2|) in any
// instance of edge density at least eps: dyadic degree classes, a maximal
// packing of the heaviest class's neighborhoods, Mnets per packing edge, and
// a pigeonhole onto the element contained in the most neighborhoods.
TuranBlock bipartite_turan(const BipartiteInstance& inst, const Rational& eps,
                           std::uint64_t seed = 0,
                           const ToolkitConstants& constants = default_constants());

// k-partite extension: flattens classes 2..k into one product class, extracts
// a bipartite block, and recurses on the surviving tuples at their exact
// residual density. The returned product is verified complete end to end.
TuranBlock kpartite_turan(const std::vector<PointSet>& classes, const SemiAlgRelation& rel,
                          const Rational& eps, std::uint64_t seed = 0,
                          const ToolkitConstants& constants = default_constants());

}  // namespace pierce
