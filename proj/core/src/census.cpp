#include "pierce/census.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pierce/random.hpp"

namespace pierce {

namespace {

// Visits every k-subset of [0, n) in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    if (k > n) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        visit(pick);
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
    return result;
}

}  // namespace

Family family_of_cells(const SimplicialPartition& partition, const std::vector<int>& parts) {
    std::vector<Simplex> members;
    for (int p : parts) members.push_back(partition.parts.at(p).cell);
    return make_family(partition.dimension, std::move(members));
}

CensusResult tuple_census(const SimplicialPartition& partition,
                          const std::optional<EdgeList>& edges) {
    const int d = partition.dimension;
    const int n = static_cast<int>(partition.source.points.size());

    std::vector<int> nonempty;
    for (int p = 0; p < static_cast<int>(partition.parts.size()); ++p) {
        if (!partition.parts[p].indices.empty()) nonempty.push_back(p);
    }

    CensusResult result;
    result.summary.r_nonempty = static_cast<int>(nonempty.size());
    result.summary.has_edges = edges.has_value();

    for_each_subset(static_cast<int>(nonempty.size()), d + 1, [&](const std::vector<int>& pick) {
        std::vector<int> cells;
        for (int i : pick) cells.push_back(nonempty[i]);
        const FamilyClass cls = classify_family(family_of_cells(partition, cells));
        result.tuple_class.emplace(cells, cls);
        switch (cls) {
            case FamilyClass::crossed: ++result.summary.crossed; break;
            case FamilyClass::loose: ++result.summary.loose; break;
            case FamilyClass::tight: ++result.summary.tight; break;
        }
    });

    if (!edges) return result;

    const std::vector<int> owner = partition.point_to_part();
    std::map<std::vector<int>, long long> tight_load;
    for (const auto& edge : *edges) {
        if (static_cast<int>(edge.size()) != d + 1) {
            raise(Errc::invalid_argument, "edges must have d+1 vertices");
        }
        std::vector<int> cells;
        for (int v : edge) {
            if (v < 0 || v >= n) raise(Errc::index_out_of_range, "edge vertex index");
            cells.push_back(owner[v]);
        }
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        result.edge_ambient_cells.push_back(cells);
        if (static_cast<int>(cells.size()) < d + 1) {
            result.edge_kinds.push_back(EdgeKind::crowded);
            ++result.summary.crowded;
            continue;
        }
        switch (result.tuple_class.at(cells)) {
            case FamilyClass::crossed:
                result.edge_kinds.push_back(EdgeKind::crossed_ambient);
                ++result.summary.crossed_ambient;
                break;
            case FamilyClass::loose:
                result.edge_kinds.push_back(EdgeKind::loose_ambient);
                ++result.summary.loose_ambient;
                break;
            case FamilyClass::tight:
                result.edge_kinds.push_back(EdgeKind::tight_ambient);
                ++result.summary.tight_ambient;
                ++tight_load[cells];
                break;
        }
    }

    if (result.summary.tight > 0) {
        // Heaviest loaded tight family; the memo map iterates in
        // lexicographic key order, so ties resolve to the least tuple.
        for (const auto& [cells, cls] : result.tuple_class) {
            if (cls != FamilyClass::tight) continue;
            const auto it = tight_load.find(cells);
            const long long load = it == tight_load.end() ? 0 : it->second;
            if (!result.summary.heaviest_tight_cells.has_value() ||
                load > result.summary.heaviest_tight_load) {
                result.summary.heaviest_tight_cells = cells;
                result.summary.heaviest_tight_load = load;
            }
        }
    }
    return result;
}

ColoredCensus colored_tuple_census(const std::vector<PointSet>& colors, int r,
                                   std::uint64_t seed) {
    if (colors.empty()) raise(Errc::empty_color_class, "no color classes");
    const int d = colors[0].dimension;
    if (static_cast<int>(colors.size()) != d + 1) {
        raise(Errc::invalid_argument, "need exactly d+1 color classes");
    }
    if (r < 1) raise(Errc::invalid_r, "need r >= 1");

    ColoredCensus census;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i].dimension != d) raise(Errc::dimension_mismatch, "color class dimension");
        const int ni = static_cast<int>(colors[i].points.size());
        if (ni == 0) raise(Errc::empty_color_class, "color class has no points");
        // Classes smaller than r degrade to singleton parts, which is the
        // r = n partition.
        const int ri = std::min(r, ni);
        census.partitions.push_back(build_partition(colors[i], ri, mix_seed(seed, i)));
    }

    std::vector<std::vector<int>> nonempty(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const auto& parts = census.partitions[i].parts;
        for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
            if (!parts[p].indices.empty()) nonempty[i].push_back(p);
        }
    }

    std::vector<std::size_t> pick(colors.size(), 0);
    for (;;) {
        std::vector<Simplex> members;
        std::vector<int> tuple;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            const int part = nonempty[i][pick[i]];
            tuple.push_back(part);
            members.push_back(census.partitions[i].parts[part].cell);
        }
        switch (classify_family(make_family(d, std::move(members)))) {
            case FamilyClass::crossed: ++census.crossed; break;
            case FamilyClass::loose: ++census.loose; break;
            case FamilyClass::tight:
                ++census.tight;
                census.tight_tuples.push_back(std::move(tuple));
                break;
        }
        std::size_t pos = 0;
        while (pos < colors.size()) {
            if (++pick[pos] < nonempty[pos].size()) break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == colors.size()) break;
    }
    return census;
}

SameTypeResult same_type_extract(const PointSet& points, int k, std::optional<int> r_override,
                                 std::uint64_t seed, const ToolkitConstants& constants) {
    const int d = points.dimension;
    const int n = static_cast<int>(points.points.size());
    if (k < d + 1) raise(Errc::invalid_k, "need k >= d+1");
    if (k > n) raise(Errc::insufficient_points, "need at least k points");

    int r;
    if (r_override) {
        r = *r_override;
        if (r < k || r > n) raise(Errc::invalid_r, "need k <= r <= n");
    } else {
        // r = ceil(c * k^(d^2)), the homogeneity budget, clamped to the legal
        // range.
        Rational est = constants.same_type_coefficient;
        for (int t = 0; t < d * d; ++t) est *= k;
        const Integer ceiled = ceil_rational(est);
        r = ceiled > n ? n : std::max(k, static_cast<int>(ceiled));
    }

    SameTypeResult result;
    result.r_used = r;
    const SimplicialPartition partition = build_partition(points, r, seed);

    std::vector<int> nonempty;
    for (int p = 0; p < static_cast<int>(partition.parts.size()); ++p) {
        if (!partition.parts[p].indices.empty()) nonempty.push_back(p);
    }
    const int v = static_cast<int>(nonempty.size());
    if (v < k) raise(Errc::clique_not_found, "fewer nonempty parts than k");

    // Homogeneity hypergraph: a (d+1)-tuple of parts is a hyperedge when the
    // cells are separated, hence every colorful point tuple has one sign.
    std::map<std::vector<int>, int> edge_sign;  // key: tuple into [0, v)
    std::vector<int> degree(v, 0);
    for_each_subset(v, d + 1, [&](const std::vector<int>& pick) {
        std::vector<int> cells;
        for (int i : pick) cells.push_back(nonempty[i]);
        Family family = family_of_cells(partition, cells);
        bool separated = false;
        try {
            separated = is_separated(family);
        } catch (const Error& e) {
            if (e.code() != Errc::degenerate_vertices) throw;
        }
        if (!separated) return;
        std::vector<Point> tuple;
        for (int c : cells) tuple.push_back(partition.parts[c].cell.vertices[0]);
        edge_sign.emplace(pick, orientation(tuple));
        for (int i : pick) ++degree[i];
    });

    // Candidate order: most homogeneous parts first.
    std::vector<int> order(v);
    for (int i = 0; i < v; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });

    // Backtracking clique search: every (d+1)-subset of the chosen parts must
    // be a hyperedge. New candidates only need checking on subsets that
    // include them.
    std::vector<int> clique;
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
        if (static_cast<int>(clique.size()) == k) return true;
        for (std::size_t at = from; at < order.size(); ++at) {
            const int cand = order[at];
            if (static_cast<int>(order.size() - at) < k - static_cast<int>(clique.size())) break;
            bool compatible = true;
            if (static_cast<int>(clique.size()) >= d) {
                for_each_subset(static_cast<int>(clique.size()), d, [&](const std::vector<int>& sub) {
                    if (!compatible) return;
                    std::vector<int> tuple;
                    for (int s : sub) tuple.push_back(clique[s]);
                    tuple.push_back(cand);
                    std::sort(tuple.begin(), tuple.end());
                    if (!edge_sign.count(tuple)) compatible = false;
                });
            }
            if (!compatible) continue;
            clique.push_back(cand);
            if (extend(at + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    if (!extend(0)) {
        raise(Errc::clique_not_found, "no homogeneous k-clique at this r; raise r");
    }

    std::sort(clique.begin(), clique.end());
    for (int i : clique) {
        result.chosen_parts.push_back(nonempty[i]);
        result.subsets.push_back(partition.parts[nonempty[i]].indices);
    }
    for_each_subset(k, d + 1, [&](const std::vector<int>& sub) {
        std::vector<int> tuple;
        for (int s : sub) tuple.push_back(clique[s]);
        result.order_type.push_back(edge_sign.at(tuple));
    });
    if (static_cast<long long>(result.order_type.size()) != binomial(k, d + 1)) {
        raise(Errc::invalid_argument, "order type vector size mismatch");
    }
    return result;
}

}  // namespace pierce
