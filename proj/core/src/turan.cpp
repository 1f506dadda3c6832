#include "pierce/turan.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pierce/errors.hpp"
#include "pierce/partition.hpp"
#include "pierce/random.hpp"

namespace pierce {

namespace {

std::vector<bool> edge_mask(const std::vector<int>& edge, int ground_size) {
    std::vector<bool> mask(ground_size, false);
    for (int v : edge) {
        if (v < 0 || v >= ground_size) raise(Errc::index_out_of_range, "hyperedge vertex");
        mask[v] = true;
    }
    return mask;
}

int symmetric_difference(const std::vector<bool>& a, const std::vector<bool>& b) {
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i];
    return count;
}

}  // namespace

std::vector<int> maximal_packing(int ground_size, const std::vector<std::vector<int>>& hyperedges,
                                 const Rational& delta) {
    if (delta <= 0 || delta > 1) raise(Errc::invalid_argument, "need 0 < delta <= 1");
    if (ground_size < 0) raise(Errc::invalid_argument, "negative ground size");
    const Rational limit = delta * ground_size;

    std::vector<std::vector<bool>> masks;
    masks.reserve(hyperedges.size());
    for (const auto& edge : hyperedges) masks.push_back(edge_mask(edge, ground_size));

    std::vector<int> kept;
    for (std::size_t e = 0; e < hyperedges.size(); ++e) {
        bool far_from_all = true;
        for (int k : kept) {
            if (Rational(symmetric_difference(masks[e], masks[k])) <= limit) {
                far_from_all = false;
                break;
            }
        }
        if (far_from_all) kept.push_back(static_cast<int>(e));
    }

    // Greedy construction makes this impossible to violate; scan anyway so a
    // regression cannot ship a packing that silently lost maximality.
    for (std::size_t e = 0; e < hyperedges.size(); ++e) {
        bool close_to_kept = false;
        for (int k : kept) {
            if (Rational(symmetric_difference(masks[e], masks[k])) <= limit) {
                close_to_kept = true;
                break;
            }
        }
        if (!close_to_kept) throw std::logic_error("packing is not maximal");
    }
    return kept;
}

namespace {

std::string point_description(const Point& p) {
    std::ostringstream out;
    out << "(";
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c) out << ", ";
        out << p[c];
    }
    out << ")";
    return out.str();
}

MnetResult mnet_attempt(const PointSet& v2, const std::vector<int>& rho, const Rational& eps_i,
                        int r, std::uint64_t seed, const ToolkitConstants& constants) {
    const int n2 = static_cast<int>(v2.points.size());
    MnetResult result;

    const bool tiny_scale = eps_i * n2 < constants.mnet_singleton_threshold ||
                            Rational(static_cast<int>(rho.size())) <
                                constants.mnet_singleton_threshold;
    if (tiny_scale) {
        result.used_singletons = true;
        result.r_used = 0;
        for (int v : rho) {
            result.elements.push_back({{v}, "point " + point_description(v2.points[v])});
        }
        return result;
    }

    PointSet members;
    members.dimension = v2.dimension;
    for (int v : rho) members.points.push_back(v2.points[v]);
    result.r_used = std::max(1, std::min(static_cast<int>(rho.size()), r));
    const SimplicialPartition partition =
        build_partition(members, result.r_used, mix_seed(seed, 0x6d6e6574));

    const Rational keep_floor = constants.mnet_keep_fraction * eps_i * n2;
    for (std::size_t part = 0; part < partition.parts.size(); ++part) {
        const auto& indices = partition.parts[part].indices;
        if (Rational(static_cast<int>(indices.size())) < keep_floor || indices.empty()) continue;
        MnetElement element;
        for (int local : indices) element.members.push_back(rho[local]);
        std::sort(element.members.begin(), element.members.end());
        std::ostringstream region;
        region << "cell";
        for (const auto& vertex : partition.parts[part].cell.vertices) {
            region << " " << point_description(vertex);
        }
        element.region = region.str();
        result.elements.push_back(std::move(element));
    }
    return result;
}

bool mnet_covers(const MnetResult& mnet, const std::vector<int>& rho,
                 const std::vector<std::vector<int>>& hyperedges, const Rational& eps_i, int n2,
                 const ToolkitConstants& constants) {
    std::vector<bool> in_rho(n2, false);
    for (int v : rho) in_rho[v] = true;
    const Rational large = constants.mnet_large_edge_fraction * eps_i * n2;

    for (const auto& edge : hyperedges) {
        std::vector<bool> in_edge(n2, false);
        int overlap = 0;
        for (int v : edge) {
            in_edge[v] = true;
            overlap += in_rho[v];
        }
        if (Rational(overlap) < large) continue;
        bool contains_element = false;
        for (const auto& element : mnet.elements) {
            bool inside = true;
            for (int v : element.members) {
                if (!in_edge[v]) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                contains_element = true;
                break;
            }
        }
        if (!contains_element) return false;
    }
    return true;
}

}  // namespace

MnetResult build_mnet(const PointSet& v2, const std::vector<int>& rho,
                      const std::vector<std::vector<int>>& hyperedges, const Rational& eps_i,
                      int r, std::uint64_t seed, const ToolkitConstants& constants) {
    if (rho.empty()) raise(Errc::invalid_argument, "rho must be nonempty");
    if (eps_i <= 0) raise(Errc::invalid_argument, "need eps_i > 0");
    if (r < 1) raise(Errc::invalid_r, "need r >= 1");
    const int n2 = static_cast<int>(v2.points.size());
    for (int v : rho) {
        if (v < 0 || v >= n2) raise(Errc::index_out_of_range, "rho vertex");
    }

    MnetResult result = mnet_attempt(v2, rho, eps_i, r, seed, constants);
    result.cover_verified = mnet_covers(result, rho, hyperedges, eps_i, n2, constants);
    if (result.cover_verified || result.used_singletons) return result;

    // One retry at doubled resolution; a second failure is reported as a
    // diagnostic rather than an error so the caller can fall back.
    MnetResult retry = mnet_attempt(v2, rho, eps_i, 2 * r, mix_seed(seed, 0x72747279), constants);
    retry.cover_verified = mnet_covers(retry, rho, hyperedges, eps_i, n2, constants);
    return retry;
}

namespace {

// Bipartite core over an arbitrary exact membership predicate. The right
// class's geometry drives the Mnet partitions; the left class is abstract.
struct BipartiteCore {
    int n1 = 0;
    const PointSet* right = nullptr;
    std::function<bool(int, int)> edge;
};

TuranBlock turan_core(const BipartiteCore& inst, const Rational& eps, std::uint64_t seed,
                      const ToolkitConstants& constants) {
    const int n1 = inst.n1;
    const int n2 = static_cast<int>(inst.right->points.size());
    if (n1 == 0 || n2 == 0) raise(Errc::empty_edge_set, "a vertex class is empty");
    if (eps <= 0 || eps > 1) raise(Errc::invalid_argument, "need 0 < eps <= 1");

    // The exhaustive incidence scan is also the exact density certificate.
    std::vector<std::vector<bool>> neighbor(n1, std::vector<bool>(n2, false));
    std::vector<int> degree(n1, 0);
    long long edge_count = 0;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            if (inst.edge(i, j)) {
                neighbor[i][j] = true;
                ++degree[i];
                ++edge_count;
            }
        }
    }
    if (Rational(edge_count) < eps * n1 * n2) {
        raise(Errc::density_too_low, "edge density below the requested eps");
    }

    TuranBlock block;
    if (edge_count == static_cast<long long>(n1) * n2) {
        // Complete instance: the incidence scan has already verified every
        // pair, so the full classes are the certified block.
        block.subsets.resize(2);
        for (int i = 0; i < n1; ++i) block.subsets[0].push_back(i);
        for (int j = 0; j < n2; ++j) block.subsets[1].push_back(j);
        block.complete = true;
        block.size_product = static_cast<long long>(n1) * n2;
        block.region_note = "the full right class";
        return block;
    }

    // Dyadic degree classes: class i holds degrees in
    // [2^(i-1), 2^i) * eps * n2 / divisor, with the top class closed above.
    const int divisor = constants.dyadic_divisor;
    int class_count = 1;
    {
        Rational cap = Rational(2) * eps / divisor;
        while (cap < 1) {
            cap *= 2;
            ++class_count;
        }
    }
    std::vector<std::vector<int>> classes(class_count);
    Rational lower = eps * n2 / divisor;
    long long classed_mass = 0;
    for (int c = 0; c < class_count; ++c) {
        const Rational upper = lower * 2;
        for (int i = 0; i < n1; ++i) {
            if (Rational(degree[i]) >= lower &&
                (c + 1 == class_count || Rational(degree[i]) < upper)) {
                classes[c].push_back(i);
                classed_mass += degree[i];
            }
        }
        lower = upper;
    }
    if (2 * classed_mass < edge_count) {
        throw std::logic_error("dyadic classes lost more than half the edge mass");
    }

    int best_class = -1;
    Rational best_score = 0;
    for (int c = 0; c < class_count; ++c) {
        if (classes[c].empty()) continue;
        const Rational score =
            Rational(static_cast<long long>(classes[c].size()) << (c + 1), (c + 1) * (c + 1));
        if (best_class < 0 || score > best_score) {
            best_class = c;
            best_score = score;
        }
    }
    if (best_class < 0) throw std::logic_error("no nonempty dyadic class despite positive mass");

    const Rational eps_i = Rational(Integer(1) << best_class) * eps / divisor;
    const std::vector<int>& members = classes[best_class];

    std::vector<std::vector<int>> neighborhoods;
    neighborhoods.reserve(members.size());
    for (int i : members) {
        std::vector<int> hood;
        for (int j = 0; j < n2; ++j) {
            if (neighbor[i][j]) hood.push_back(j);
        }
        neighborhoods.push_back(std::move(hood));
    }

    const std::vector<int> packing =
        maximal_packing(n2, neighborhoods, constants.packing_delta_fraction * eps_i);

    // Mnet elements across all packing edges, tagged with their origin.
    std::vector<MnetElement> elements;
    std::vector<int> element_owner;
    bool covers_ok = true;
    for (std::size_t p = 0; p < packing.size(); ++p) {
        const std::vector<int>& rho = neighborhoods[packing[p]];
        const Rational spread = eps_i * n2;
        int r = 4;
        if (spread > 0) {
            const Rational suggested = Rational(20 * static_cast<long long>(rho.size())) / spread;
            if (suggested > 4) r = static_cast<int>(ceil_rational(suggested));
        }
        const MnetResult mnet = build_mnet(*inst.right, rho, neighborhoods, eps_i, r,
                                           mix_seed(seed, 0x7475 + p), constants);
        covers_ok = covers_ok && mnet.cover_verified;
        for (const auto& element : mnet.elements) {
            elements.push_back(element);
            element_owner.push_back(members[packing[p]]);
        }
    }

    // Pigeonhole the class onto the element contained in most neighborhoods.
    std::vector<int> support_count(elements.size(), 0);
    for (std::size_t e = 0; e < elements.size(); ++e) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& row = neighbor[members[i]];
            bool inside = true;
            for (int v : elements[e].members) {
                if (!row[v]) {
                    inside = false;
                    break;
                }
            }
            support_count[e] += inside;
        }
    }
    int best_element = -1;
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (best_element < 0 || support_count[e] > support_count[best_element]) {
            best_element = static_cast<int>(e);
        }
    }

    // The covering property guarantees a supported element; if the Mnets
    // degraded, fall back to the best single right vertex so the block stays
    // nonempty, and leave the diagnostic flag down.
    if (best_element < 0 || support_count[best_element] == 0) {
        covers_ok = false;
        elements.clear();
        element_owner.assign(1, -1);
        int best_vertex = 0;
        int best_support = -1;
        for (int j = 0; j < n2; ++j) {
            int support = 0;
            for (int i : members) support += neighbor[i][j];
            if (support > best_support) {
                best_support = support;
                best_vertex = j;
            }
        }
        elements.push_back(
            {{best_vertex}, "point " + point_description(inst.right->points[best_vertex])});
        best_element = 0;
    }

    const MnetElement& chosen = elements[best_element];
    block.subsets.resize(2);
    for (int i : members) {
        bool inside = true;
        for (int v : chosen.members) {
            if (!neighbor[i][v]) {
                inside = false;
                break;
            }
        }
        if (inside) block.subsets[0].push_back(i);
    }
    block.subsets[1] = chosen.members;
    block.mnet_cover_verified = covers_ok;

    // Exhaustive completeness scan; construction already guarantees it, the
    // certificate must not depend on that.
    bool complete = !block.subsets[0].empty() && !block.subsets[1].empty();
    for (int i : block.subsets[0]) {
        for (int j : block.subsets[1]) complete = complete && inst.edge(i, j);
    }
    block.complete = complete;
    block.size_product = static_cast<long long>(block.subsets[0].size()) *
                         static_cast<long long>(block.subsets[1].size());
    std::ostringstream note;
    if (element_owner[best_element] >= 0) {
        note << "neighborhood of left vertex " << element_owner[best_element] << " /\\ ";
    }
    note << chosen.region;
    block.region_note = note.str();
    return block;
}

}  // namespace

TuranBlock bipartite_turan(const BipartiteInstance& inst, const Rational& eps, std::uint64_t seed,
                           const ToolkitConstants& constants) {
    if (inst.relation.block_dims.size() != 2) {
        raise(Errc::dimension_mismatch, "bipartite instances need a two-block relation");
    }
    if (inst.v1.dimension != inst.relation.block_dims[0] ||
        inst.v2.dimension != inst.relation.block_dims[1]) {
        raise(Errc::dimension_mismatch, "class dimensions vs relation blocks");
    }
    BipartiteCore core;
    core.n1 = static_cast<int>(inst.v1.points.size());
    core.right = &inst.v2;
    core.edge = [&inst](int i, int j) {
        return eval_relation(inst.relation, {inst.v1.points[i], inst.v2.points[j]});
    };
    return turan_core(core, eps, seed, constants);
}

namespace {

// k-partite extraction over an explicit tuple predicate. `digits` carries one
// index per class, aligned with `classes`.
TuranBlock kpartite_impl(const std::vector<PointSet>& classes,
                         const std::function<bool(const std::vector<int>&)>& edge,
                         const Rational& eps, std::uint64_t seed,
                         const ToolkitConstants& constants) {
    const int k = static_cast<int>(classes.size());

    if (k == 2) {
        BipartiteCore core;
        core.n1 = static_cast<int>(classes[0].points.size());
        core.right = &classes[1];
        core.edge = [&edge](int i, int j) { return edge({i, j}); };
        return turan_core(core, eps, seed, constants);
    }

    // Flatten classes 2..k into one product class of concatenated points.
    long long total = 1;
    for (int c = 1; c < k; ++c) {
        total *= static_cast<long long>(classes[c].points.size());
        if (total > 2000000) raise(Errc::invalid_argument, "flattened class product too large");
    }

    PointSet flattened;
    for (int c = 1; c < k; ++c) flattened.dimension += classes[c].dimension;
    std::vector<std::vector<int>> digits_of(static_cast<std::size_t>(total));
    for (long long t = 0; t < total; ++t) {
        std::vector<int> digits(k - 1);
        long long rest = t;
        for (int c = k - 1; c >= 1; --c) {
            const long long size = static_cast<long long>(classes[c].points.size());
            digits[c - 1] = static_cast<int>(rest % size);
            rest /= size;
        }
        Point combined;
        combined.reserve(flattened.dimension);
        for (int c = 1; c < k; ++c) {
            const Point& part = classes[c].points[digits[c - 1]];
            combined.insert(combined.end(), part.begin(), part.end());
        }
        flattened.points.push_back(std::move(combined));
        digits_of[static_cast<std::size_t>(t)] = std::move(digits);
    }

    BipartiteCore core;
    core.n1 = static_cast<int>(classes[0].points.size());
    core.right = &flattened;
    core.edge = [&edge, &digits_of](int i, int t) {
        std::vector<int> digits;
        digits.reserve(digits_of[t].size() + 1);
        digits.push_back(i);
        digits.insert(digits.end(), digits_of[t].begin(), digits_of[t].end());
        return edge(digits);
    };
    const TuranBlock top = turan_core(core, eps, seed, constants);

    // Survivors form the residual (k-1)-partite edge set, taken at its exact
    // density.
    std::set<std::vector<int>> residual;
    for (int t : top.subsets[1]) residual.insert(digits_of[t]);
    const Rational gamma(static_cast<long long>(residual.size()), total);

    const std::vector<PointSet> rest(classes.begin() + 1, classes.end());
    const auto member = [&residual](const std::vector<int>& digits) {
        return residual.count(digits) > 0;
    };
    const TuranBlock inner =
        kpartite_impl(rest, member, gamma, mix_seed(seed, 0x6b700000 + k), constants);

    TuranBlock block;
    block.subsets.push_back(top.subsets[0]);
    for (const auto& w : inner.subsets) block.subsets.push_back(w);
    block.mnet_cover_verified = top.mnet_cover_verified && inner.mnet_cover_verified;
    block.region_note = inner.region_note;
    block.size_product = 1;
    for (const auto& w : block.subsets) block.size_product *= static_cast<long long>(w.size());

    // End-to-end completeness scan over the whole product.
    bool complete = top.complete && inner.complete;
    for (const auto& w : block.subsets) complete = complete && !w.empty();
    if (complete) {
        std::vector<int> digits(k, 0);
        std::vector<std::size_t> cursor(k, 0);
        while (true) {
            for (int c = 0; c < k; ++c) digits[c] = block.subsets[c][cursor[c]];
            if (!edge(digits)) {
                complete = false;
                break;
            }
            int c = k - 1;
            while (c >= 0 && cursor[c] + 1 == block.subsets[c].size()) cursor[c--] = 0;
            if (c < 0) break;
            ++cursor[c];
        }
    }
    block.complete = complete;
    return block;
}

}  // namespace

TuranBlock kpartite_turan(const std::vector<PointSet>& classes, const SemiAlgRelation& rel,
                          const Rational& eps, std::uint64_t seed,
                          const ToolkitConstants& constants) {
    const int k = static_cast<int>(classes.size());
    if (k < 2) raise(Errc::invalid_argument, "need at least two classes");
    if (rel.block_dims.size() != classes.size()) {
        raise(Errc::dimension_mismatch, "one class per relation block");
    }
    for (int c = 0; c < k; ++c) {
        if (classes[c].points.empty()) raise(Errc::empty_edge_set, "a vertex class is empty");
        if (classes[c].dimension != rel.block_dims[c]) {
            raise(Errc::dimension_mismatch, "class dimension vs relation block");
        }
    }

    const auto edge = [&classes, &rel](const std::vector<int>& digits) {
        std::vector<Point> tuple;
        tuple.reserve(digits.size());
        for (std::size_t c = 0; c < digits.size(); ++c) {
            tuple.push_back(classes[c].points[digits[c]]);
        }
        return eval_relation(rel, tuple);
    };
    return kpartite_impl(classes, edge, eps, seed, constants);
}

}  // namespace pierce
