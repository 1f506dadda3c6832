#pragma once

#include <optional>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/lp.hpp"

namespace pierce {

// d+1 pairwise vertex-disjoint simplices in R^d whose vertices are jointly in
// general position. Members are usually (d-1)- or d-simplices; lower
// dimensional members (down to single points) are accepted so degenerate
// probes can be expressed.
struct Family {
    int dimension = 0;
    std::vector<Simplex> members;
};

Family make_family(int dimension, std::vector<Simplex> members);

enum class FamilyClass { crossed, loose, tight };

const char* family_class_name(FamilyClass c) noexcept;

// True when every colorful vertex tuple (one vertex per member) has the same
// nonzero orientation. A zero orientation raises DegenerateVertices.
bool is_separated(const Family& family);

// The unique hyperplane tangent to every member except `omit`, touching each
// of them at exactly one vertex, with the omitted member strictly on the
// negative side. Requires a separated family.
OrientedHyperplane inner_tangent(const Family& family, int omit);

enum class DeltaKind { bounded_simplex, unbounded, empty };

struct DeltaCell {
    DeltaKind kind = DeltaKind::empty;
    std::optional<Simplex> cell;  // present iff kind == bounded_simplex
    std::vector<OrientedHyperplane> tangents;
};

// The open cell cut out by the inner tangents (each oriented so its member
// lies in the negative open side). Exactly one of: bounded open simplex,
// unbounded and nonempty, or empty.
DeltaCell delta_cell(const Family& family);

// crossed  = not separated;
// tight    = separated and the tangent cell is a bounded simplex;
// loose    = separated otherwise.
FamilyClass classify_family(const Family& family);

// Independent route to tightness: the intersection of the closed simplices
// spanned by all colorful vertex tuples, as an exact (deduplicated) halfspace
// list plus a strict-interior feasibility flag.
struct ColorfulCore {
    std::vector<OrientedHyperplane> halfspaces;
    bool interior_nonempty = false;
};

ColorfulCore colorful_core_oracle(const Family& family);

// One point per member certifying x in conv(union of member vertices):
// x is a convex combination of the member points.
struct ColorfulWitness {
    std::vector<Point> member_points;
};

std::optional<ColorfulWitness> pinned_with_witness(const Family& family, const Point& x);

// Hyperplane through d member vertices meeting the closure of every member;
// exists iff the family is not separated. With require_crossed the absence is
// an error (NoTransversal), otherwise nullopt certifies separatedness.
struct VertexTransversal {
    OrientedHyperplane plane;
    std::vector<Point> support;
};

std::optional<VertexTransversal> transversal_through_vertices(const Family& family, bool require_crossed);

// For a loose family pinned at x: a hyperplane through x (and d-1 member
// vertices) that meets the closures of at least d members.
OrientedHyperplane crossing_hyperplane_through_point(const Family& family, const Point& x);

}  // namespace pierce
