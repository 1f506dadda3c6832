#include "pierce/selection.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pierce/errors.hpp"
#include "pierce/random.hpp"

namespace pierce {

namespace {

void validate_edges(const EdgeList& edges, int n, int d) {
    for (const auto& edge : edges) {
        if (static_cast<int>(edge.size()) != d + 1) {
            raise(Errc::invalid_argument, "edges must have d+1 vertices");
        }
        std::set<int> distinct;
        for (int v : edge) {
            if (v < 0 || v >= n) raise(Errc::index_out_of_range, "edge vertex index");
            if (!distinct.insert(v).second) {
                raise(Errc::invalid_argument, "edge vertices must be distinct");
            }
        }
    }
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
    return result;
}

// r from the edge density: ceil(c * eps^-(d^4+d)) capped at n. Dense inputs
// yield tiny r; anything below half density already saturates the cap.
int derive_r(int n, int d, long long edge_count, const ToolkitConstants& constants) {
    const long long tuples = binomial(n, d + 1);
    Rational base = Rational(tuples, edge_count);
    Rational power = 1;
    const int alpha = d * d * d * d + d;
    for (int i = 0; i < alpha; ++i) {
        power *= base;
        // A growing power sequence that already clears the cap stays there;
        // stop multiplying before the numbers get astronomically wide.
        if (base >= 1 && constants.selection_r_coefficient * power > n) break;
    }
    const Rational estimate = constants.selection_r_coefficient * power;
    if (estimate > n) return n;
    const Integer ceiled = ceil_rational(estimate);
    const int r = static_cast<int>(ceiled);
    return std::max(1, std::min(n, r));
}

struct Frame {
    PointSet points;
    EdgeList edges;
};

Point select_recursive(const Frame& frame, std::uint64_t seed, const SelectionOptions& options,
                       int n0, int depth_level, SelectionTrace& trace) {
    const int d = frame.points.dimension;
    const int n = static_cast<int>(frame.points.points.size());

    SelectionLevel level;
    level.n = n;
    level.edge_count = static_cast<long long>(frame.edges.size());

    if (n <= n0) {
        level.action = SelectionCase::oracle_base;
        trace.levels.push_back(std::move(level));
        return brute_force_deepest(frame.points, frame.edges, options.threads).point;
    }

    const int r = options.r ? std::min(*options.r, n)
                            : derive_r(n, d, level.edge_count, options.constants);
    level.r = r;
    const SimplicialPartition partition =
        build_partition(frame.points, r, mix_seed(seed, 0x73656c + depth_level));
    const CensusResult census = tuple_census(partition, frame.edges);
    level.census = census.summary;

    // Case 1: tight-ambient edges carry at least half the mass (ties included).
    if (2 * census.summary.tight_ambient >= level.edge_count) {
        const std::vector<int> heaviest = *census.summary.heaviest_tight_cells;
        level.action = SelectionCase::tight_pigeonhole;
        level.chosen_cells = heaviest;
        trace.levels.push_back(std::move(level));

        const DeltaCell delta = delta_cell(family_of_cells(partition, heaviest));
        const Point x = delta.cell->centroid();

        // Tightness promises the intersection cell inside every simplex whose
        // vertices the family's cells enclose; a miss here is a bug.
        for (std::size_t e = 0; e < frame.edges.size(); ++e) {
            if (census.edge_kinds[e] != EdgeKind::tight_ambient ||
                census.edge_ambient_cells[e] != heaviest) {
                continue;
            }
            std::vector<Point> vertices;
            for (int v : frame.edges[e]) vertices.push_back(frame.points.points[v]);
            if (!point_in_simplex(x, make_simplex(vertices, d), Containment::open)) {
                throw std::logic_error("tight family centroid missed an assigned edge");
            }
        }
        return x;
    }

    // Case 2: recurse on the parts behind the most-loaded non-tight group.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (std::size_t e = 0; e < frame.edges.size(); ++e) {
        if (census.edge_kinds[e] == EdgeKind::tight_ambient) continue;
        groups[census.edge_ambient_cells[e]].push_back(static_cast<int>(e));
    }
    const std::vector<int>* best_key = nullptr;
    std::size_t best_load = 0;
    for (const auto& [cells, assigned] : groups) {
        if (assigned.size() > best_load) {
            best_load = assigned.size();
            best_key = &cells;
        }
    }

    std::vector<int> member_indices;
    for (int cell : *best_key) {
        member_indices.insert(member_indices.end(), partition.parts[cell].indices.begin(),
                              partition.parts[cell].indices.end());
    }
    std::sort(member_indices.begin(), member_indices.end());

    // A non-shrinking subproblem (possible when r leaves d+1 or fewer
    // nonempty parts) would recurse forever; hand it to the oracle instead.
    if (static_cast<int>(member_indices.size()) >= n) {
        level.action = SelectionCase::oracle_base;
        level.chosen_cells = *best_key;
        trace.levels.push_back(std::move(level));
        return brute_force_deepest(frame.points, frame.edges, options.threads).point;
    }

    level.action = SelectionCase::recurse_ambient;
    level.chosen_cells = *best_key;
    trace.levels.push_back(std::move(level));

    std::vector<int> position(frame.points.points.size(), -1);
    Frame next;
    next.points.dimension = d;
    for (int i : member_indices) {
        position[i] = static_cast<int>(next.points.points.size());
        next.points.points.push_back(frame.points.points[i]);
    }
    for (int e : groups.at(*best_key)) {
        std::vector<int> edge;
        for (int v : frame.edges[e]) edge.push_back(position[v]);
        std::sort(edge.begin(), edge.end());
        next.edges.push_back(std::move(edge));
    }
    return select_recursive(next, seed, options, n0, depth_level + 1, trace);
}

}  // namespace

const char* selection_case_name(SelectionCase action) noexcept {
    switch (action) {
        case SelectionCase::tight_pigeonhole: return "tight_pigeonhole";
        case SelectionCase::recurse_ambient: return "recurse_ambient";
        case SelectionCase::oracle_base: return "oracle_base";
    }
    return "unknown";
}

std::pair<DepthResult, SelectionTrace> select_point(const PointSet& points, const EdgeList& edges,
                                                    std::uint64_t seed,
                                                    const SelectionOptions& options) {
    const int d = points.dimension;
    if (d != 2 && d != 3) {
        raise(Errc::unsupported_dimension, "selection base oracle needs d in {2, 3}");
    }
    if (edges.empty()) raise(Errc::empty_edge_set, "selection needs at least one edge");
    const int n = static_cast<int>(points.points.size());
    validate_edges(edges, n, d);
    if (options.r && (*options.r < 1 || *options.r > n)) {
        raise(Errc::invalid_r, "need 1 <= r <= n");
    }
    if (!options.base_threshold && d == 3) {
        raise(Errc::invalid_argument, "the base threshold is mandatory in d=3");
    }
    const int n0 = options.base_threshold ? *options.base_threshold
                                          : options.constants.selection_base_threshold;
    if (n0 < d + 1) raise(Errc::invalid_argument, "base threshold below d+1");

    Frame frame{points, edges};
    SelectionTrace trace;
    const Point x = select_recursive(frame, seed, options, n0, 0, trace);

    // The reported count is always an exact recount of the full input edge
    // set at the final point, whatever path produced it.
    DepthResult result;
    result.point = x;
    result.pierced_indices = std::vector<int>{};
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::vector<Point> vertices;
        for (int v : edges[e]) vertices.push_back(points.points[v]);
        if (point_in_simplex(x, make_simplex(vertices, d), Containment::open)) {
            result.pierced_indices->push_back(static_cast<int>(e));
        }
    }
    result.pierced_count = static_cast<long long>(result.pierced_indices->size());
    return {result, trace};
}

}  // namespace pierce
