#include "pierce/partition.hpp"

#include <algorithm>
#include <functional>

#include "pierce/random.hpp"

namespace pierce {

namespace {

// Comparator for the median splits: primary key is the split axis, ties fall
// through the remaining coordinates cyclically and finally the input index,
// so the split rank is always unambiguous.
struct AxisLess {
    const std::vector<Point>* pts;
    int axis;
    int dimension;

    bool operator()(int a, int b) const {
        const Point& pa = (*pts)[a];
        const Point& pb = (*pts)[b];
        for (int k = 0; k < dimension; ++k) {
            const int c = (axis + k) % dimension;
            if (pa[c] != pb[c]) return pa[c] < pb[c];
        }
        return a < b;
    }
};

// Recursively splits `idx[lo, hi)` into parts of the given target sizes by
// median cuts along rotating axes.
void split_recursive(const std::vector<Point>& pts, int dimension, std::vector<int>& idx, int lo,
                     int hi, const std::vector<int>& targets, int t_lo, int t_hi, int depth,
                     std::vector<std::vector<int>>& out) {
    if (t_hi - t_lo == 1) {
        std::vector<int> part(idx.begin() + lo, idx.begin() + hi);
        std::sort(part.begin(), part.end());
        out[t_lo] = std::move(part);
        return;
    }
    const int t_mid = t_lo + (t_hi - t_lo) / 2;
    int left = 0;
    for (int t = t_lo; t < t_mid; ++t) left += targets[t];
    AxisLess less{&pts, depth % dimension, dimension};
    std::nth_element(idx.begin() + lo, idx.begin() + lo + left, idx.begin() + hi, less);
    split_recursive(pts, dimension, idx, lo, lo + left, targets, t_lo, t_mid, depth + 1, out);
    split_recursive(pts, dimension, idx, lo + left, hi, targets, t_mid, t_hi, depth + 1, out);
}

// Corner simplex {x : x_k >= a_k for all k, sum(x) <= s} as a vertex list:
// the corner a and one vertex per axis at distance (s - sum(a)).
std::vector<Point> corner_simplex_vertices(const Point& corner, const Rational& size) {
    const int d = static_cast<int>(corner.size());
    std::vector<Point> vertices = {corner};
    for (int k = 0; k < d; ++k) {
        Point v = corner;
        v[k] += size;
        vertices.push_back(std::move(v));
    }
    return vertices;
}

// Inflates a vertex list away from its centroid by the factor p/q > 1.
void inflate_about_centroid(std::vector<Point>& vertices, const Rational& factor) {
    const Point c = centroid_of(vertices);
    for (auto& v : vertices) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = c[k] + factor * (v[k] - c[k]);
    }
}

// Cell around a point group: a padded corner simplex containing the group's
// bounding box, inflated by 1% and vertex-perturbed into general position.
// The open-interior containment of every group point is re-verified exactly;
// failed rounds retry with halved perturbation.
Simplex build_cell(const std::vector<Point>& pts, const std::vector<int>& indices,
                   const Rational& pad_floor, std::uint64_t seed) {
    const int d = static_cast<int>(pts[indices[0]].size());
    Point corner = pts[indices[0]];
    Rational hi_sum = 0;
    for (int c = 0; c < d; ++c) hi_sum += corner[c];
    for (int i : indices) {
        Rational sum = 0;
        for (int c = 0; c < d; ++c) {
            if (pts[i][c] < corner[c]) corner[c] = pts[i][c];
            sum += pts[i][c];
        }
        if (sum > hi_sum) hi_sum = sum;
    }
    Rational corner_sum = 0;
    for (int c = 0; c < d; ++c) corner_sum += corner[c];
    const Rational width = hi_sum - corner_sum;
    const Rational pad = (width + pad_floor) / 100 + pad_floor / 10;
    for (int c = 0; c < d; ++c) corner[c] -= pad;
    const Rational size = width + pad * (d + 1);

    std::vector<Point> base = corner_simplex_vertices(corner, size);
    inflate_about_centroid(base, Rational(101, 100));

    Rational magnitude = pad / 50;
    for (int round = 0; round < 24; ++round) {
        Rng rng(mix_seed(seed, 0x63656c6c + round));
        std::vector<Point> vertices = base;
        for (auto& v : vertices) {
            for (auto& coord : v) coord += magnitude * rng.signed_unit(30);
        }
        if (!affinely_independent(vertices, d)) {
            magnitude /= 2;
            continue;
        }
        Simplex cell = make_simplex(std::move(vertices), d);
        bool inside = true;
        for (int i : indices) {
            if (!point_in_simplex(pts[i], cell, Containment::open)) {
                inside = false;
                break;
            }
        }
        if (inside) return cell;
        magnitude /= 2;
    }
    raise(Errc::retry_exhausted, "cell perturbation kept violating containment");
}

Simplex dummy_cell(const Point& bbox_max, const Rational& span, int j, int dimension,
                   std::uint64_t seed) {
    Rational offset = (span + 1) * 4;
    Rational size = (span + 1) / 4;
    for (int t = 0; t < j; ++t) {
        offset *= 4;
        size /= 4;
    }
    Point corner = bbox_max;
    for (auto& c : corner) c += offset;
    std::vector<Point> vertices = corner_simplex_vertices(corner, size);
    Rng rng(mix_seed(seed, 0x64756d6d + j));
    for (auto& v : vertices) {
        for (auto& c : v) c += size * rng.signed_unit(30) / 8;
    }
    return make_simplex(std::move(vertices), dimension);
}

}  // namespace

int SimplicialPartition::nonempty_count() const {
    int count = 0;
    for (const auto& p : parts) count += !p.indices.empty();
    return count;
}

std::vector<int> SimplicialPartition::point_to_part() const {
    std::vector<int> owner(source.points.size(), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (int i : parts[p].indices) owner[i] = static_cast<int>(p);
    }
    return owner;
}

SimplicialPartition build_partition(const PointSet& points, int r, std::uint64_t seed) {
    const int n = static_cast<int>(points.points.size());
    const int d = points.dimension;
    if (r < 1 || r > n) raise(Errc::invalid_r, "need 1 <= r <= n");
    if (n == 0 || d < 1) raise(Errc::invalid_argument, "empty point set");

    // Nonempty part sizes: floor(n/m) parts of size m = ceil(n/r), with the
    // remainder folded into the last part (still below 2m). Leftover slots
    // become dummy parts.
    const int m = (n + r - 1) / r;
    const int nonempty = n / m;
    std::vector<int> targets(nonempty, m);
    targets.back() += n - nonempty * m;

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::vector<int>> groups(nonempty);
    split_recursive(points.points, d, idx, 0, n, targets, 0, nonempty, 0, groups);

    // Data bounding box, for the pad floor and the dummy placement.
    Point bbox_min = points.points[0];
    Point bbox_max = points.points[0];
    for (const auto& p : points.points) {
        for (int c = 0; c < d; ++c) {
            if (p[c] < bbox_min[c]) bbox_min[c] = p[c];
            if (p[c] > bbox_max[c]) bbox_max[c] = p[c];
        }
    }
    Rational span = 0;
    for (int c = 0; c < d; ++c) {
        const Rational extent = bbox_max[c] - bbox_min[c];
        if (extent > span) span = extent;
    }
    const Rational pad_floor = (span + 1) / (100 * r);

    for (int attempt = 0; attempt < 8; ++attempt) {
        SimplicialPartition result;
        result.dimension = d;
        result.r = r;
        result.source = points;
        const std::uint64_t salt = mix_seed(seed, 0x70617274 + attempt);
        for (int g = 0; g < nonempty; ++g) {
            PartitionPart part;
            part.indices = groups[g];
            part.cell = build_cell(points.points, part.indices, pad_floor, mix_seed(salt, g));
            result.parts.push_back(std::move(part));
        }
        for (int j = 0; j < r - nonempty; ++j) {
            PartitionPart part;
            part.cell = dummy_cell(bbox_max, span, j, d, mix_seed(salt, 0x10000 + j));
            result.parts.push_back(std::move(part));
        }

        // Joint genericity of the cell vertices: scan in full when the subset
        // count stays affordable, otherwise trust the perturbation.
        std::vector<Point> all_vertices;
        for (const auto& part : result.parts) {
            all_vertices.insert(all_vertices.end(), part.cell.vertices.begin(),
                                part.cell.vertices.end());
        }
        double combos = 1;
        for (int t = 0; t <= d; ++t) combos *= static_cast<double>(all_vertices.size() - t) / (t + 1);
        if (combos > 200000.0) {
            return result;
        }
        if (verify_generic(all_vertices, d)) {
            result.cells_verified_generic = true;
            return result;
        }
    }
    raise(Errc::retry_exhausted, "cell vertices kept failing the joint genericity scan");
}

bool hyperplane_crosses_cell(const OrientedHyperplane& h, const Simplex& cell) {
    bool pos = false, neg = false;
    for (const auto& v : cell.vertices) {
        const int s = h.side(v);
        pos = pos || s > 0;
        neg = neg || s < 0;
        if (pos && neg) return true;
    }
    return false;
}

CrossingProfile crossing_profile(const SimplicialPartition& partition,
                                 const std::vector<OrientedHyperplane>& probes) {
    CrossingProfile profile;
    profile.probes = static_cast<int>(probes.size());
    profile.histogram.assign(partition.parts.size() + 1, 0);
    for (const auto& h : probes) {
        if (static_cast<int>(h.normal.size()) != partition.dimension) {
            raise(Errc::dimension_mismatch, "probe dimension");
        }
        int crossed = 0;
        for (const auto& part : partition.parts) {
            crossed += hyperplane_crosses_cell(h, part.cell);
        }
        ++profile.histogram[crossed];
        profile.maximum = std::max(profile.maximum, crossed);
    }
    return profile;
}

CrossingProfile crossing_profile_auto(const SimplicialPartition& partition, int count,
                                      std::uint64_t seed) {
    const int d = partition.dimension;
    const auto& pts = partition.source.points;
    Rng rng(mix_seed(seed, 0x70726f62));

    Point bbox_min = pts[0];
    Point bbox_max = pts[0];
    for (const auto& p : pts) {
        for (int c = 0; c < d; ++c) {
            if (p[c] < bbox_min[c]) bbox_min[c] = p[c];
            if (p[c] > bbox_max[c]) bbox_max[c] = p[c];
        }
    }

    std::vector<OrientedHyperplane> probes;
    const int through_points = static_cast<int>(pts.size()) >= d ? count / 2 : 0;
    while (static_cast<int>(probes.size()) < through_points) {
        std::vector<int> pick = rng.sample_indices(pts.size(), d);
        std::vector<Point> support;
        for (int i : pick) support.push_back(pts[i]);
        if (!affinely_independent(support, d)) continue;
        probes.push_back(spanning_hyperplane(support));
    }
    while (static_cast<int>(probes.size()) < count) {
        OrientedHyperplane h;
        h.normal.resize(d);
        bool all_zero = true;
        for (auto& c : h.normal) {
            c = rng.signed_unit(16);
            all_zero = all_zero && c == 0;
        }
        if (all_zero) continue;
        Point anchor(d);
        for (int c = 0; c < d; ++c) {
            anchor[c] = bbox_min[c] + rng.open_unit(16) * (bbox_max[c] - bbox_min[c]);
        }
        h.offset = 0;
        h.offset = h.eval(anchor);
        probes.push_back(std::move(h));
    }
    return crossing_profile(partition, probes);
}

}  // namespace pierce
