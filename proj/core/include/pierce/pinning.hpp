#pragma once

#include <cstdint>
#include <vector>

#include "pierce/constants.hpp"
#include "pierce/family.hpp"
#include "pierce/geometry.hpp"
#include "pierce/rational.hpp"

namespace pierce {

// One reported family: d+1 input simplices, verified loose and pinned at the
// returned point, plus the convex combination certifying the pin.
struct PinnedFamily {
    std::vector<int> member_indices;  // sorted indices into the input list
    ColorfulWitness witness;          // one point per member, in index order
};

// Result of one pinning run. When no one-per-class tuple is loose the family
// list stays empty, loose_tuples is 0, and the point falls back to the
// centroid of all input vertices.
struct PinningOutcome {
    Point point;                         // deepest point over the representative classes
    std::vector<PinnedFamily> families;  // deduplicated, sorted by member indices
    std::vector<int> colors;             // class assigned to each input simplex
    Rational eta;                        // final shrink radius (0 when nothing was shrunk)
    long long loose_tuples = 0;          // loose one-per-class facet tuples after shrinking
    long long block_product = 0;         // size product of the extracted complete block
};

// Pins many loose (d+1)-size subfamilies of sigma at a single point. The
// simplices are colored into d+1 random classes and swapped for their d+1
// boundary facets; the facets are shrunk inward until the joint vertex set is
// generic while every previously loose one-per-class facet tuple stays loose
// (the radius starts at the minimum inter-vertex distance over 2^shift and
// halves until an exact recheck of all tuples passes). A complete loose
// product block is extracted from the facet hypergraph, and the deepest point
// of the colorful simplices spanned by one representative point per block
// facet is taken. Facet tuples containing that point are mapped back to their
// parent simplices; only parent families passing the exact loose and pinned
// checks are reported, so false positives are impossible.
//
// Requires d in {2, 3}, at least d+1 full-dimensional d-simplices, and a
// jointly generic vertex set.
PinningOutcome pinning_pipeline(const std::vector<Simplex>& sigma, std::uint64_t seed,
                                const ToolkitConstants& constants = default_constants(),
                                int threads = 1);

}  // namespace pierce
