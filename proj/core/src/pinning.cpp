#include "pierce/pinning.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "pierce/depth.hpp"
#include "pierce/errors.hpp"
#include "pierce/random.hpp"
#include "pierce/relation.hpp"
#include "pierce/turan.hpp"

namespace pierce {

namespace {

constexpr int kShrinkAttempts = 64;

Rational linf_distance(const Point& a, const Point& b) {
    Rational best(0);
    for (std::size_t c = 0; c < a.size(); ++c) {
        Rational diff = abs(a[c] - b[c]);
        if (diff > best) best = diff;
    }
    return best;
}

// Walks the one-facet-per-class tuples in odometer order (last class
// fastest), handing the visitor one digit vector per tuple. All classes must
// be nonempty.
template <typename Visitor>
void for_each_tuple(const std::vector<std::vector<int>>& class_facets, Visitor&& visit) {
    std::vector<int> digits(class_facets.size(), 0);
    for (;;) {
        visit(digits);
        int pos = static_cast<int>(class_facets.size()) - 1;
        while (pos >= 0 && digits[pos] + 1 == static_cast<int>(class_facets[pos].size())) {
            digits[pos--] = 0;
        }
        if (pos < 0) break;
        ++digits[pos];
    }
}

FamilyClass classify_tuple(const std::vector<std::vector<int>>& class_facets,
                           const std::vector<int>& digits,
                           const std::vector<std::vector<Point>>& facet_vertices, int d) {
    std::vector<Simplex> members;
    for (std::size_t c = 0; c < digits.size(); ++c) {
        members.push_back(make_simplex(facet_vertices[class_facets[c][digits[c]]], d));
    }
    return classify_family(make_family(d, std::move(members)));
}

// Pulls every facet vertex toward a random interior point of its facet by a
// random fraction of eta (in the L-infinity sense), so the moved vertex stays
// inside the original facet and within eta of its old position.
std::vector<std::vector<Point>> shrink_facets(const std::vector<std::vector<Point>>& facets,
                                              const Rational& eta, Rng& rng) {
    std::vector<std::vector<Point>> shrunk;
    shrunk.reserve(facets.size());
    for (const auto& verts : facets) {
        std::vector<Point> moved;
        moved.reserve(verts.size());
        for (const Point& v : verts) {
            Point target(v.size(), Rational(0));
            Rational total(0);
            for (const Point& w : verts) {
                const Rational weight(rng.int_in(1, 1 << 12));
                for (std::size_t c = 0; c < v.size(); ++c) target[c] += weight * w[c];
                total += weight;
            }
            for (auto& coord : target) coord /= total;
            Rational ratio = eta / linf_distance(target, v);
            if (ratio > 1) ratio = 1;
            const Rational scale = rng.open_unit(12) * ratio;
            Point out = v;
            for (std::size_t c = 0; c < v.size(); ++c) out[c] += scale * (target[c] - v[c]);
            moved.push_back(std::move(out));
        }
        shrunk.push_back(std::move(moved));
    }
    return shrunk;
}

}  // namespace

PinningOutcome pinning_pipeline(const std::vector<Simplex>& sigma, std::uint64_t seed,
                                const ToolkitConstants& constants, int threads) {
    if (sigma.empty()) raise(Errc::invalid_argument, "no simplices");
    const int d = sigma.front().ambient_dimension();
    if (d != 2 && d != 3) raise(Errc::unsupported_dimension, "pinning needs d in {2, 3}");
    const int r = static_cast<int>(sigma.size());
    if (r < d + 1) raise(Errc::invalid_argument, "need at least d+1 simplices");
    std::vector<Point> input_vertices;
    for (const Simplex& s : sigma) {
        if (s.ambient_dimension() != d) raise(Errc::dimension_mismatch, "mixed ambient dimensions");
        if (s.dim() != d) raise(Errc::invalid_argument, "members must be full-dimensional simplices");
        input_vertices.insert(input_vertices.end(), s.vertices.begin(), s.vertices.end());
    }
    if (!verify_generic(input_vertices, d)) {
        raise(Errc::degenerate_vertices, "input vertices must be jointly generic");
    }

    PinningOutcome out;
    out.eta = Rational(0);

    Rng color_rng(mix_seed(seed, 0x636f6c6f));
    out.colors.resize(r);
    for (auto& color : out.colors) color = static_cast<int>(color_rng.index(d + 1));

    // Boundary complex: each d-simplex contributes the d+1 facets obtained by
    // dropping one vertex, all inheriting the parent's class.
    std::vector<int> facet_parent;
    std::vector<std::vector<Point>> facet_vertices;
    std::vector<std::vector<int>> class_facets(d + 1);
    for (int i = 0; i < r; ++i) {
        for (int drop = 0; drop <= d; ++drop) {
            std::vector<Point> verts;
            for (int j = 0; j <= d; ++j) {
                if (j != drop) verts.push_back(sigma[i].vertices[j]);
            }
            class_facets[out.colors[i]].push_back(static_cast<int>(facet_parent.size()));
            facet_parent.push_back(i);
            facet_vertices.push_back(std::move(verts));
        }
    }
    const bool all_classes_filled = std::all_of(
        class_facets.begin(), class_facets.end(),
        [](const std::vector<int>& c) { return !c.empty(); });
    if (!all_classes_filled) {
        out.point = centroid_of(input_vertices);
        return out;
    }

    // Tuples loose before any shrinking. Facets of distinct parents never
    // share a vertex and the input set is generic, so classification is safe.
    std::set<std::vector<int>> loose_before;
    for_each_tuple(class_facets, [&](const std::vector<int>& digits) {
        if (classify_tuple(class_facets, digits, facet_vertices, d) == FamilyClass::loose) {
            loose_before.insert(digits);
        }
    });
    if (loose_before.empty()) {
        out.point = centroid_of(input_vertices);
        return out;
    }

    Rational min_dist(0);
    bool first_pair = true;
    for (std::size_t i = 0; i < input_vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < input_vertices.size(); ++j) {
            const Rational dist = linf_distance(input_vertices[i], input_vertices[j]);
            if (first_pair || dist < min_dist) {
                min_dist = dist;
                first_pair = false;
            }
        }
    }
    Rational eta = min_dist;
    for (int s = 0; s < constants.pinning_eta_shift; ++s) eta /= 2;

    // Shrink with the current radius, then re-verify exactly: the joint vertex
    // set and the facet representatives must be generic, and every previously
    // loose tuple must still be loose. Any failure halves the radius and
    // redraws the jitter.
    std::vector<std::vector<Point>> shrunk;
    std::vector<Point> reps;
    std::set<std::vector<int>> loose_after;
    bool settled = false;
    for (int attempt = 0; attempt < kShrinkAttempts; ++attempt) {
        if (attempt > 0) eta /= 2;
        Rng jitter(mix_seed(seed, 0x73687200 + static_cast<std::uint64_t>(attempt)));
        auto candidate = shrink_facets(facet_vertices, eta, jitter);
        std::vector<Point> joint;
        for (const auto& verts : candidate) joint.insert(joint.end(), verts.begin(), verts.end());
        if (!verify_generic(joint, d)) continue;
        std::vector<Point> candidate_reps;
        candidate_reps.reserve(candidate.size());
        for (const auto& verts : candidate) candidate_reps.push_back(centroid_of(verts));
        if (!verify_generic(candidate_reps, d)) continue;
        loose_after.clear();
        for_each_tuple(class_facets, [&](const std::vector<int>& digits) {
            if (classify_tuple(class_facets, digits, candidate, d) == FamilyClass::loose) {
                loose_after.insert(digits);
            }
        });
        const bool preserved = std::includes(loose_after.begin(), loose_after.end(),
                                             loose_before.begin(), loose_before.end());
        if (!preserved) continue;
        shrunk = std::move(candidate);
        reps = std::move(candidate_reps);
        settled = true;
        break;
    }
    if (!settled) raise(Errc::retry_exhausted, "no shrink radius kept every loose tuple loose");
    out.eta = eta;
    out.loose_tuples = static_cast<long long>(loose_after.size());

    long long total_tuples = 1;
    for (const auto& facets : class_facets) total_tuples *= static_cast<long long>(facets.size());
    const Rational density(static_cast<long long>(loose_after.size()), total_tuples);

    std::vector<PointSet> blocks(d + 1);
    for (int c = 0; c <= d; ++c) {
        blocks[c].dimension = d * d;
        for (int f : class_facets[c]) blocks[c].points.push_back(encode_simplex_block(shrunk[f], d));
    }
    const TuranBlock block =
        kpartite_turan(blocks, loose_relation(d), density, mix_seed(seed, 0x7475726e), constants);
    out.block_product = block.size_product;

    std::vector<PointSet> rep_classes(d + 1);
    for (int c = 0; c <= d; ++c) {
        rep_classes[c].dimension = d;
        for (int idx : block.subsets[c]) rep_classes[c].points.push_back(reps[class_facets[c][idx]]);
    }
    const DepthResult depth = colorful_deepest(rep_classes, threads);
    out.point = depth.point;

    // Each pierced colorful tuple names one block facet per class; its parent
    // simplices form a candidate family. Deduplicate, then keep exactly the
    // candidates passing both the loose and the pinned check.
    std::set<std::vector<int>> parent_sets;
    for (int rank : *depth.pierced_indices) {
        std::vector<int> parents(d + 1);
        long long rest = rank;
        for (int c = d; c >= 0; --c) {
            const long long size = static_cast<long long>(block.subsets[c].size());
            const int digit = static_cast<int>(rest % size);
            rest /= size;
            parents[c] = facet_parent[class_facets[c][block.subsets[c][digit]]];
        }
        std::sort(parents.begin(), parents.end());
        parent_sets.insert(std::move(parents));
    }
    for (const auto& parents : parent_sets) {
        std::vector<Simplex> members;
        for (int p : parents) members.push_back(sigma[p]);
        const Family family = make_family(d, std::move(members));
        if (classify_family(family) != FamilyClass::loose) continue;
        auto witness = pinned_with_witness(family, out.point);
        if (!witness) continue;
        out.families.push_back(PinnedFamily{parents, std::move(*witness)});
    }
    return out;
}

}  // namespace pierce
