#include "pierce/depth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "pierce/errors.hpp"
#include "pierce/rational.hpp"

namespace pierce {

namespace {

// Orientation signs computed locally on difference vectors; tau and the
// per-vertex substitution tests below use the same convention, so only
// internal consistency matters.
int sign3(const Point& a, const Point& b, const Point& c) {
    const Rational det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return sign_of(det);
}

int sign4(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rational x1 = b[0] - a[0], y1 = b[1] - a[1], z1 = b[2] - a[2];
    const Rational x2 = c[0] - a[0], y2 = c[1] - a[1], z2 = c[2] - a[2];
    const Rational x3 = d[0] - a[0], y3 = d[1] - a[1], z3 = d[2] - a[2];
    const Rational det = x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) +
                         z1 * (x2 * y3 - y2 * x3);
    return sign_of(det);
}

// One simplex of the query workload: vertex pointers, base orientation, and
// a bounding box that cheaply rejects most candidates.
struct QuerySimplex {
    std::vector<const Point*> v;
    int tau = 0;
    Point lo, hi;
};

QuerySimplex make_query(std::vector<const Point*> vertices, int dimension) {
    QuerySimplex q;
    q.v = std::move(vertices);
    q.lo = *q.v[0];
    q.hi = *q.v[0];
    for (std::size_t i = 1; i < q.v.size(); ++i) {
        for (int c = 0; c < dimension; ++c) {
            const Rational& x = (*q.v[i])[c];
            if (x < q.lo[c]) q.lo[c] = x;
            if (x > q.hi[c]) q.hi[c] = x;
        }
    }
    if (dimension == 2) {
        q.tau = sign3(*q.v[0], *q.v[1], *q.v[2]);
    } else {
        q.tau = sign4(*q.v[0], *q.v[1], *q.v[2], *q.v[3]);
    }
    return q;
}

// x strictly inside (open) or weakly inside (closed) the simplex: every
// vertex substitution keeps the base orientation, with zeros allowed only in
// the closed case.
bool simplex_contains(const QuerySimplex& q, const Point& x, int dimension, bool closed) {
    for (int c = 0; c < dimension; ++c) {
        if (closed ? (x[c] < q.lo[c] || x[c] > q.hi[c])
                   : (x[c] <= q.lo[c] || x[c] >= q.hi[c])) {
            return false;
        }
    }
    if (dimension == 2) {
        for (int i = 0; i < 3; ++i) {
            const Point& a = i == 0 ? x : *q.v[0];
            const Point& b = i == 1 ? x : *q.v[1];
            const Point& c = i == 2 ? x : *q.v[2];
            const int s = sign3(a, b, c);
            if (s != q.tau && !(closed && s == 0)) return false;
        }
        return true;
    }
    for (int i = 0; i < 4; ++i) {
        const Point& a = i == 0 ? x : *q.v[0];
        const Point& b = i == 1 ? x : *q.v[1];
        const Point& c = i == 2 ? x : *q.v[2];
        const Point& d = i == 3 ? x : *q.v[3];
        const int s = sign4(a, b, c, d);
        if (s != q.tau && !(closed && s == 0)) return false;
    }
    return true;
}

long long depth_at(const std::vector<QuerySimplex>& queries, const Point& x, int dimension,
                   bool closed) {
    long long count = 0;
    for (const auto& q : queries) count += simplex_contains(q, x, dimension, closed);
    return count;
}

// Highest depth over the candidates, ties to the lowest candidate index, so
// the result does not depend on the thread count.
std::size_t best_candidate(const std::vector<Point>& candidates,
                           const std::vector<QuerySimplex>& queries, int dimension, bool closed,
                           int threads) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(candidates.size())));
    std::vector<long long> best_count(threads, -1);
    std::vector<std::size_t> best_index(threads, 0);
    auto worker = [&](int t) {
        for (std::size_t i = t; i < candidates.size(); i += threads) {
            const long long count = depth_at(queries, candidates[i], dimension, closed);
            if (count > best_count[t]) {
                best_count[t] = count;
                best_index[t] = i;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    std::size_t best = best_index[0];
    long long count = best_count[0];
    for (int t = 1; t < threads; ++t) {
        if (best_count[t] > count || (best_count[t] == count && best_index[t] < best)) {
            count = best_count[t];
            best = best_index[t];
        }
    }
    return best;
}

Rational cross2(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

// Counterclockwise from the positive x-axis; exact, so concurrent lines sort
// stably.
bool ccw_before(const Point& u, const Point& v) {
    const auto half = [](const Point& w) {
        return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1;
    };
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross2(u, v) > 0;
}

bool lex_positive(const Point& u) { return u[0] > 0 || (u[0] == 0 && u[1] > 0); }

// Interior representatives, one per bounded cell of the line arrangement.
// Every bounded cell is a convex polygon with a unique lexicographically
// least vertex v; there it occupies one wedge between consecutive lines
// through v, all of whose directions are lex-positive. The representative is
// the centroid of v and the two adjacent cell vertices along the wedge rays.
std::vector<Point> bounded_cell_points_2d(const std::vector<OrientedHyperplane>& lines) {
    std::map<Point, std::vector<int>> vertices;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Rational den =
                lines[i].normal[0] * lines[j].normal[1] - lines[j].normal[0] * lines[i].normal[1];
            if (den == 0) continue;
            Point v = {(lines[i].offset * lines[j].normal[1] -
                        lines[j].offset * lines[i].normal[1]) / den,
                       (lines[i].normal[0] * lines[j].offset -
                        lines[j].normal[0] * lines[i].offset) / den};
            auto& incident = vertices[std::move(v)];
            incident.push_back(static_cast<int>(i));
            incident.push_back(static_cast<int>(j));
        }
    }

    std::vector<Point> candidates;
    for (auto& [v, incident_raw] : vertices) {
        std::sort(incident_raw.begin(), incident_raw.end());
        incident_raw.erase(std::unique(incident_raw.begin(), incident_raw.end()),
                           incident_raw.end());
        const std::vector<int>& incident = incident_raw;

        std::vector<Point> dirs;
        for (int li : incident) {
            Point dir = {-lines[li].normal[1], lines[li].normal[0]};
            dirs.push_back(dir);
            dirs.push_back({-dir[0], -dir[1]});
        }
        std::sort(dirs.begin(), dirs.end(), ccw_before);

        // Exactly one direction per antipodal pair is lex-positive, and the
        // lex-positive directions form one contiguous run of the circular
        // order. Wedges between consecutive run members open rightward.
        const int m = static_cast<int>(dirs.size());
        int start = -1;
        for (int i = 0; i < m; ++i) {
            if (lex_positive(dirs[i]) && !lex_positive(dirs[(i + m - 1) % m])) {
                start = i;
                break;
            }
        }
        if (start < 0) continue;  // cannot happen for two or more lines

        // First positive parameter at which the ray from v leaves the cell;
        // rays that never hit another line bound an unbounded cell.
        const auto first_hit = [&](const Point& dir) -> std::optional<Rational> {
            std::optional<Rational> best;
            for (std::size_t li = 0; li < lines.size(); ++li) {
                const Rational at = lines[li].eval(v);
                if (at == 0) continue;
                const Rational den = lines[li].normal[0] * dir[0] + lines[li].normal[1] * dir[1];
                if (den == 0) continue;
                const Rational t = -at / den;
                if (t > 0 && (!best || t < *best)) best = t;
            }
            return best;
        };

        const int run = static_cast<int>(incident.size());
        for (int w = 0; w + 1 < run; ++w) {
            const Point& da = dirs[(start + w) % m];
            const Point& db = dirs[(start + w + 1) % m];
            const auto ta = first_hit(da);
            if (!ta) continue;
            const auto tb = first_hit(db);
            if (!tb) continue;
            candidates.push_back({v[0] + (*ta * da[0] + *tb * db[0]) / 3,
                                  v[1] + (*ta * da[1] + *tb * db[1]) / 3});
        }
    }
    return candidates;
}

// Arrangement vertices: solutions of independent hyperplane triples (d=3) or
// pairs (d=2), deduplicated exactly, each with its full incident set.
std::map<Point, std::vector<int>> arrangement_vertices_3d(
    const std::vector<OrientedHyperplane>& planes) {
    std::map<Point, std::vector<int>> vertices;
    const int h = static_cast<int>(planes.size());
    for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
            for (int k = j + 1; k < h; ++k) {
                Matrix a = {planes[i].normal, planes[j].normal, planes[k].normal};
                const auto sol =
                    solve_linear(a, {planes[i].offset, planes[j].offset, planes[k].offset});
                if (!sol || !sol->unique) continue;
                vertices.emplace(sol->solution, std::vector<int>{});
            }
        }
    }
    for (auto& [v, incident] : vertices) {
        for (int li = 0; li < h; ++li) {
            if (planes[li].eval(v) == 0) incident.push_back(li);
        }
    }
    return vertices;
}

// Interior representatives for 3d cells: each arrangement vertex displaced
// into each of its incident cones. Every bounded cell is a polytope whose
// vertices are arrangement vertices, so the cones at those vertices cover
// all bounded cells. Directions come from sign-pattern solves over incident
// plane triples; the step stays below half the distance to the nearest
// non-incident plane along the ray.
std::vector<Point> cone_displaced_points_3d(const std::vector<OrientedHyperplane>& planes) {
    std::vector<Point> candidates;
    for (const auto& [v, incident] : arrangement_vertices_3d(planes)) {
        std::set<std::vector<int>> seen_cones;
        const int k = static_cast<int>(incident.size());
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                for (int c = b + 1; c < k; ++c) {
                    Matrix m = {planes[incident[a]].normal, planes[incident[b]].normal,
                                planes[incident[c]].normal};
                    for (int mask = 0; mask < 8; ++mask) {
                        Point rhs = {mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1};
                        const auto sol = solve_linear(m, rhs);
                        if (!sol || !sol->unique) continue;
                        const Point& u = sol->solution;

                        std::vector<int> cone;
                        bool interior = true;
                        for (int li : incident) {
                            const Rational g = planes[li].normal[0] * u[0] +
                                               planes[li].normal[1] * u[1] +
                                               planes[li].normal[2] * u[2];
                            if (g == 0) {
                                interior = false;
                                break;
                            }
                            cone.push_back(g > 0 ? 1 : -1);
                        }
                        if (!interior || !seen_cones.insert(cone).second) continue;

                        std::optional<Rational> nearest;
                        for (const auto& plane : planes) {
                            const Rational at = plane.eval(v);
                            if (at == 0) continue;
                            const Rational den = plane.normal[0] * u[0] + plane.normal[1] * u[1] +
                                                 plane.normal[2] * u[2];
                            if (den == 0) continue;
                            const Rational t = -at / den;
                            if (t > 0 && (!nearest || t < *nearest)) nearest = t;
                        }
                        const Rational step = nearest ? *nearest / 2 : Rational(1);
                        candidates.push_back(
                            {v[0] + step * u[0], v[1] + step * u[1], v[2] + step * u[2]});
                    }
                }
            }
        }
    }
    return candidates;
}

std::vector<OrientedHyperplane> spanned_hyperplanes(const std::vector<Point>& pts, int d) {
    std::vector<OrientedHyperplane> result;
    const int n = static_cast<int>(pts.size());
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    if (d > n) return result;
    for (;;) {
        std::vector<Point> support;
        for (int i : pick) support.push_back(pts[i]);
        result.push_back(spanning_hyperplane(support));
        int pos = d - 1;
        while (pos >= 0 && pick[pos] == n - d + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
    }
    return result;
}

void require_generic(const std::vector<Point>& pts, int d, const char* what) {
    if (!verify_generic(pts, d)) raise(Errc::degenerate_vertices, what);
}

}  // namespace

DepthResult brute_force_deepest(const PointSet& points, const EdgeList& edges, int threads) {
    const int d = points.dimension;
    if (d != 2 && d != 3) raise(Errc::unsupported_dimension, "depth oracle needs d in {2, 3}");
    if (edges.empty()) raise(Errc::empty_edge_set, "depth oracle needs at least one edge");
    const int n = static_cast<int>(points.points.size());
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
    require_generic(points.points, d, "depth oracle needs a generic point set");

    std::vector<QuerySimplex> queries;
    for (const auto& edge : edges) {
        std::vector<const Point*> v;
        for (int i : edge) v.push_back(&points.points[i]);
        queries.push_back(make_query(std::move(v), d));
    }

    const std::vector<OrientedHyperplane> planes = spanned_hyperplanes(points.points, d);
    const std::vector<Point> candidates =
        d == 2 ? bounded_cell_points_2d(planes) : cone_displaced_points_3d(planes);
    if (candidates.empty()) {
        raise(Errc::retry_exhausted, "no bounded arrangement cell produced a candidate");
    }

    const std::size_t best = best_candidate(candidates, queries, d, false, threads);

    DepthResult result;
    result.point = candidates[best];
    result.pierced_indices = std::vector<int>{};
    for (std::size_t e = 0; e < queries.size(); ++e) {
        if (simplex_contains(queries[e], result.point, d, false)) {
            result.pierced_indices->push_back(static_cast<int>(e));
        }
    }
    result.pierced_count = static_cast<long long>(result.pierced_indices->size());
    return result;
}

DepthResult colorful_deepest(const std::vector<PointSet>& classes, int threads) {
    if (classes.empty()) raise(Errc::empty_color_class, "no color classes");
    const int d = classes[0].dimension;
    if (d != 2 && d != 3) raise(Errc::unsupported_dimension, "depth oracle needs d in {2, 3}");
    if (static_cast<int>(classes.size()) != d + 1) {
        raise(Errc::invalid_argument, "need exactly d+1 color classes");
    }
    std::vector<Point> all;
    for (const auto& cls : classes) {
        if (cls.dimension != d) raise(Errc::dimension_mismatch, "color class dimension");
        if (cls.points.empty()) raise(Errc::empty_color_class, "color class has no points");
        all.insert(all.end(), cls.points.begin(), cls.points.end());
    }
    require_generic(all, d, "depth oracle needs a jointly generic union");

    // All colorful simplices, in odometer order over the class indices; the
    // reported piercing indices are these lexicographic ranks.
    std::vector<QuerySimplex> queries;
    std::vector<int> pick(classes.size(), 0);
    for (;;) {
        std::vector<const Point*> v;
        for (std::size_t i = 0; i < classes.size(); ++i) v.push_back(&classes[i].points[pick[i]]);
        queries.push_back(make_query(std::move(v), d));
        int pos = static_cast<int>(classes.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(classes[pos].points.size())) {
            pick[pos--] = 0;
        }
        if (pos < 0) break;
        ++pick[pos];
    }

    const std::vector<OrientedHyperplane> planes = spanned_hyperplanes(all, d);
    std::vector<Point> candidates;
    if (d == 2) {
        std::map<Point, std::vector<int>> vertices;
        for (std::size_t i = 0; i < planes.size(); ++i) {
            for (std::size_t j = i + 1; j < planes.size(); ++j) {
                const Rational den = planes[i].normal[0] * planes[j].normal[1] -
                                     planes[j].normal[0] * planes[i].normal[1];
                if (den == 0) continue;
                vertices.emplace(Point{(planes[i].offset * planes[j].normal[1] -
                                        planes[j].offset * planes[i].normal[1]) / den,
                                       (planes[i].normal[0] * planes[j].offset -
                                        planes[j].normal[0] * planes[i].offset) / den},
                                 std::vector<int>{});
            }
        }
        for (auto& [v, unused] : vertices) candidates.push_back(v);
    } else {
        for (auto& [v, unused] : arrangement_vertices_3d(planes)) candidates.push_back(v);
    }
    candidates.insert(candidates.end(), all.begin(), all.end());

    const std::size_t best = best_candidate(candidates, queries, d, true, threads);

    DepthResult result;
    result.point = candidates[best];
    result.pierced_indices = std::vector<int>{};
    for (std::size_t t = 0; t < queries.size(); ++t) {
        if (simplex_contains(queries[t], result.point, d, true)) {
            result.pierced_indices->push_back(static_cast<int>(t));
        }
    }
    result.pierced_count = static_cast<long long>(result.pierced_indices->size());

    // Hard floor from the colorful depth guarantee: failing it means a bug,
    // not a bad input.
    Integer product = 1;
    for (const auto& cls : classes) product *= static_cast<int>(cls.points.size());
    Integer fact = 1;
    for (int i = 2; i <= d + 1; ++i) fact *= i;
    const Integer floor = (product + fact - 1) / fact;
    if (result.pierced_count < floor) {
        throw std::logic_error("colorful depth fell below the guaranteed floor");
    }
    return result;
}

}  // namespace pierce
