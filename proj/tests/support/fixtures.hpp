#pragma once

// Shared fixtures for the unit and acceptance suites: literal point helpers,
// epsilon-cluster families, the thin-sliver loose family and its randomized
// variants, and a small LP that searches for a pin point of a loose family.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/family.hpp"
#include "pierce/geometry.hpp"
#include "pierce/lp.hpp"
#include "pierce/random.hpp"

namespace pierce::fixtures {

inline Point pt(std::initializer_list<const char*> coords) {
    Point p;
    for (const char* c : coords) p.push_back(parse_rational(c));
    return p;
}

inline Point pti(std::initializer_list<long> coords) {
    Point p;
    for (long c : coords) p.push_back(Rational(c));
    return p;
}

// Runs f and reports the error code it throws, or nullopt when it returns
// normally. Keeps error-path assertions exact without message matching.
template <typename F>
std::optional<Errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

// Small full-dimensional simplex around a center: vertices at center plus
// radius times the coordinate directions (and minus the all-ones direction),
// each jittered by a seeded fraction of the radius so distinct members stay
// jointly generic.
inline Simplex eps_simplex(const Point& center, const Rational& radius, Rng& rng) {
    const int d = static_cast<int>(center.size());
    std::vector<Point> vertices;
    for (int k = 0; k <= d; ++k) {
        Point v = center;
        for (int c = 0; c < d; ++c) {
            if (k < d) {
                v[c] += (c == k) ? radius : Rational(0);
            } else {
                v[c] -= radius;
            }
            v[c] += radius * rng.signed_unit(12) / 4;
        }
        vertices.push_back(std::move(v));
    }
    return make_simplex(std::move(vertices), d);
}

// d+1 epsilon-simplices at the given centers. Tight when the centers are
// spread generically, crossed when some hyperplane meets every cluster.
inline Family cluster_family(int dimension, const std::vector<Point>& centers,
                             const Rational& radius, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x636c7573));
    std::vector<Simplex> members;
    for (const Point& c : centers) members.push_back(eps_simplex(c, radius, rng));
    return make_family(dimension, std::move(members));
}

inline Family corner_triple(std::uint64_t seed = 1) {
    return cluster_family(2, {pti({0, 0}), pti({10, 0}), pti({0, 10})}, Rational(1, 100), seed);
}

inline Family collinear_triple(std::uint64_t seed = 1) {
    return cluster_family(2, {pti({0, 0}), pti({1, 0}), pti({2, 0})}, Rational(1, 100), seed);
}

inline Family corner_quad_3d(std::uint64_t seed = 1) {
    return cluster_family(3, {pti({0, 0, 0}), pti({10, 0, 0}), pti({0, 10, 0}), pti({0, 0, 10})},
                          Rational(1, 100), seed);
}

// Three thin triangles along the middles of the edges of the triangle with
// corners (0,0), (6,0), (0,6). No line meets all three, yet (2,2) lies in the
// convex hull of every pair, so the family is loose and pinned at (2,2).
inline Family sliver_triple() {
    std::vector<Simplex> members;
    members.push_back(make_simplex(
        {pt({"3/2", "1/101"}), pt({"9/2", "1/103"}), pt({"3", "1/19"})}, 2));
    members.push_back(make_simplex(
        {pt({"449/101", "3/2"}), pt({"3/2", "9/2"}), pt({"56/19", "3"})}, 2));
    members.push_back(make_simplex(
        {pt({"1/107", "9/2"}), pt({"1/109", "3/2"}), pt({"1/23", "151/50"})}, 2));
    return make_family(2, std::move(members));
}

inline Point sliver_pin() { return pti({2, 2}); }

// Random invertible affine image of the sliver triple plus a small vertex
// jitter. Affine maps preserve the crossed/loose/tight class and the pin has
// interior slack, so the images stay loose; every consumer still re-verifies
// the class exactly.
inline Family sliver_variant(std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x736c6976));
    Matrix map;
    Rational det;
    do {
        map = {{Rational(rng.int_in(-8, 8), 4) + 1, Rational(rng.int_in(-8, 8), 4)},
               {Rational(rng.int_in(-8, 8), 4), Rational(rng.int_in(-8, 8), 4) + 1}};
        det = map[0][0] * map[1][1] - map[0][1] * map[1][0];
    } while (det == 0 || abs(det) < Rational(1, 4));
    const Point shift = {rng.signed_unit(8) * 4, rng.signed_unit(8) * 4};

    const Family base = sliver_triple();
    std::vector<Simplex> members;
    for (const Simplex& member : base.members) {
        std::vector<Point> vertices;
        for (const Point& v : member.vertices) {
            Point w(2);
            for (int r = 0; r < 2; ++r) {
                w[r] = map[r][0] * v[0] + map[r][1] * v[1] + shift[r] + rng.signed_unit(20) / 50;
            }
            vertices.push_back(std::move(w));
        }
        members.push_back(make_simplex(std::move(vertices), 2));
    }
    return make_family(2, std::move(members));
}

// Loose family in R^3: the three slivers lifted to thin tetrahedra near the
// z=0 plane plus a fourth member far below. Any plane crossing the three
// near-planar members cuts the z~0 slab in a thin strip, which would yield a
// line transversal of the planar slivers; none exists, so the family is
// separated, and the planar pin extends to every omit-one hull.
inline Family lifted_loose_3d(std::uint64_t seed = 1) {
    Rng rng(mix_seed(seed, 0x6c696674));
    const Family base = sliver_triple();
    std::vector<Simplex> members;
    for (const Simplex& member : base.members) {
        std::vector<Point> vertices;
        for (const Point& v : member.vertices) {
            vertices.push_back({v[0] + rng.signed_unit(20) / 100, v[1] + rng.signed_unit(20) / 100,
                                rng.signed_unit(12) / 40});
        }
        Point top = centroid_of(vertices);
        top[2] += Rational(1, 30) + rng.open_unit(12) / 60;
        vertices.push_back(std::move(top));
        members.push_back(make_simplex(std::move(vertices), 3));
    }
    Rng rng2(mix_seed(seed, 0x62656c6f));
    members.push_back(eps_simplex(pti({2, 2, -100}), Rational(1, 10), rng2));
    return make_family(3, std::move(members));
}

// Tight jittered clusters around the given centers, `per` points each.
// Useful for forcing partitions whose parts coincide with the clusters.
inline PointSet cluster_point_set(const std::vector<Point>& centers, int per, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x636c7573));
    PointSet set;
    set.dimension = static_cast<int>(centers.front().size());
    for (const auto& center : centers) {
        for (int i = 0; i < per; ++i) {
            Point p = center;
            for (auto& c : p) c += Rational(rng.int_in(-100, 100), 10007);
            set.points.push_back(std::move(p));
        }
    }
    return set;
}

// Uniform-ish random rational points in a box of the given half-width.
inline PointSet random_point_set(int n, int dimension, std::uint64_t seed, long half_width = 256) {
    Rng rng(mix_seed(seed, 0x706f696e));
    PointSet set;
    set.dimension = dimension;
    for (int i = 0; i < n; ++i) {
        Point p(dimension);
        for (auto& c : p) c = Rational(rng.int_in(-half_width * 256, half_width * 256), 256);
        set.points.push_back(std::move(p));
    }
    return set;
}

// Searches for a point in the intersection of all omit-one hulls (the set of
// pin points of a loose family) by one joint feasibility LP: shared x plus
// one convex-coefficient block per omitted member.
inline std::optional<Point> find_pinned_point(const Family& family) {
    const int d = family.dimension;
    const std::size_t k = family.members.size();
    std::vector<std::vector<const Point*>> omit_union(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            for (const Point& v : family.members[j].vertices) omit_union[i].push_back(&v);
        }
    }
    int num_vars = d;
    std::vector<int> block_start(k);
    for (std::size_t i = 0; i < k; ++i) {
        block_start[i] = num_vars;
        num_vars += static_cast<int>(omit_union[i].size());
    }
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < k; ++i) {
        for (int c = 0; c < d; ++c) {
            LinearConstraint row;
            row.coeffs.assign(num_vars, Rational(0));
            row.coeffs[c] = -1;
            for (std::size_t t = 0; t < omit_union[i].size(); ++t) {
                row.coeffs[block_start[i] + t] = (*omit_union[i][t])[c];
            }
            row.rel = Rel::eq;
            row.bound = 0;
            cons.push_back(std::move(row));
        }
        LinearConstraint sum;
        sum.coeffs.assign(num_vars, Rational(0));
        for (std::size_t t = 0; t < omit_union[i].size(); ++t) sum.coeffs[block_start[i] + t] = 1;
        sum.rel = Rel::eq;
        sum.bound = 1;
        cons.push_back(std::move(sum));
        for (std::size_t t = 0; t < omit_union[i].size(); ++t) {
            LinearConstraint nonneg;
            nonneg.coeffs.assign(num_vars, Rational(0));
            nonneg.coeffs[block_start[i] + t] = 1;
            nonneg.rel = Rel::ge;
            nonneg.bound = 0;
            cons.push_back(std::move(nonneg));
        }
    }
    FeasibleResult res = detail::linear_feasible_primal(cons, num_vars);
    if (!res.feasible) return std::nullopt;
    Point x(res.witness->begin(), res.witness->begin() + d);
    return x;
}

}  // namespace pierce::fixtures
