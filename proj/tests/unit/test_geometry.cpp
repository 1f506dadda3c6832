#include "doctest.h"

#include "fixtures.hpp"
#include "pierce/geometry.hpp"
#include "pierce/lp.hpp"
#include "pierce/random.hpp"

using namespace pierce;
using fixtures::pt;
using fixtures::pti;
using fixtures::thrown_code;

TEST_CASE("orientation on canonical planar triples") {
    CHECK(orientation({pti({0, 0}), pti({1, 0}), pti({0, 1})}) == 1);
    CHECK(orientation({pti({0, 0}), pti({0, 1}), pti({1, 0})}) == -1);
    CHECK(orientation({pti({0, 0}), pti({1, 1}), pti({2, 2})}) == 0);
}

TEST_CASE("orientation rejects mismatched dimensions") {
    CHECK(thrown_code([] { orientation({pti({0, 0}), pti({1, 0, 0}), pti({0, 1})}); }) ==
          Errc::dimension_mismatch);
    CHECK(thrown_code([] { orientation({pti({0, 0}), pti({1, 0})}); }) == Errc::dimension_mismatch);
}

TEST_CASE("orientation is alternating in its arguments") {
    Rng rng(3);
    for (int d : {1, 2, 3}) {
        for (int t = 0; t < 40; ++t) {
            std::vector<Point> pts(d + 1);
            for (auto& p : pts) {
                p.resize(d);
                for (auto& c : p) c = Rational(rng.int_in(-40, 40), rng.int_in(1, 9));
            }
            const int base = orientation(pts);
            std::size_t i = rng.index(pts.size()), j = rng.index(pts.size());
            if (i == j) continue;
            std::swap(pts[i], pts[j]);
            CHECK(orientation(pts) == -base);
        }
    }
}

namespace {

// Affine dependence via feasibility: some nonzero combination with zero sum
// annihilates the points. Normalizing one coefficient to 1 in turn covers
// every nonzero direction up to scale.
bool affinely_dependent_by_lp(const std::vector<Point>& pts) {
    const int d = static_cast<int>(pts[0].size());
    const int k = static_cast<int>(pts.size());
    for (int fixed = 0; fixed < k; ++fixed) {
        for (Rational value : {Rational(1), Rational(-1)}) {
            std::vector<LinearConstraint> cons;
            for (int c = 0; c < d; ++c) {
                LinearConstraint row;
                row.coeffs.resize(k);
                for (int i = 0; i < k; ++i) row.coeffs[i] = pts[i][c];
                row.rel = Rel::eq;
                row.bound = 0;
                cons.push_back(std::move(row));
            }
            LinearConstraint sum;
            sum.coeffs.assign(k, Rational(1));
            sum.rel = Rel::eq;
            sum.bound = 0;
            cons.push_back(std::move(sum));
            LinearConstraint pin;
            pin.coeffs.assign(k, Rational(0));
            pin.coeffs[fixed] = 1;
            pin.rel = Rel::eq;
            pin.bound = value;
            cons.push_back(std::move(pin));
            if (linear_feasible(cons, k).feasible) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("orientation is zero exactly on affine dependences") {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        std::vector<Point> pts(3);
        for (auto& p : pts) p = {Rational(rng.int_in(-9, 9)), Rational(rng.int_in(-9, 9))};
        CHECK((orientation(pts) == 0) == affinely_dependent_by_lp(pts));
    }
    // Forced dependences: duplicated point and collinear triple.
    CHECK(affinely_dependent_by_lp({pti({1, 2}), pti({1, 2}), pti({0, 5})}));
    CHECK(affinely_dependent_by_lp({pti({0, 0}), pti({2, 1}), pti({4, 2})}));
    CHECK_FALSE(affinely_dependent_by_lp({pti({0, 0}), pti({1, 0}), pti({0, 1})}));
}

TEST_CASE("hyperplane_through orients toward the witness") {
    auto h = hyperplane_through({pti({0, 0}), pti({1, 0})}, pti({0, 1})).canonical();
    CHECK(h.normal == std::vector<Rational>{0, 1});
    CHECK(h.offset == 0);

    auto flipped = hyperplane_through({pti({0, 0}), pti({1, 0})}, pti({0, -1})).canonical();
    CHECK(flipped.normal == std::vector<Rational>{0, -1});
    CHECK(flipped.offset == 0);

    CHECK(thrown_code([] { hyperplane_through({pti({0, 0}), pti({2, 0})}, pti({1, 0})); }) ==
          Errc::witness_on_hyperplane);
    CHECK(thrown_code([] { hyperplane_through({pti({0, 0}), pti({0, 0})}, pti({1, 1})); }) ==
          Errc::degenerate_support);
}

TEST_CASE("hyperplane_through contains its support and sides are exact") {
    Rng rng(5);
    for (int d : {2, 3}) {
        for (int t = 0; t < 30; ++t) {
            std::vector<Point> support(d);
            Point witness(d);
            for (auto& p : support) {
                p.resize(d);
                for (auto& c : p) c = Rational(rng.int_in(-20, 20), rng.int_in(1, 4));
            }
            for (auto& c : witness) c = Rational(rng.int_in(-20, 20), rng.int_in(1, 4));
            if (!affinely_independent(support, d)) continue;
            std::vector<Point> closure = support;
            closure.push_back(witness);
            if (!affinely_independent(closure, d)) continue;
            auto h = hyperplane_through(support, witness);
            for (const auto& p : support) CHECK(h.side(p) == 0);
            CHECK(h.side(witness) == 1);
            CHECK(h.flipped().side(witness) == -1);
        }
    }
}

TEST_CASE("point_in_simplex distinguishes open and closed membership") {
    Simplex tri = make_simplex({pti({0, 0}), pti({4, 0}), pti({0, 4})}, 2);

    CHECK(point_in_simplex(tri.centroid(), tri, Containment::open));
    CHECK(point_in_simplex(tri.centroid(), tri, Containment::closed));

    CHECK(point_in_simplex(pti({0, 0}), tri, Containment::closed));
    CHECK_FALSE(point_in_simplex(pti({0, 0}), tri, Containment::open));

    // Edge midpoint: on the boundary.
    CHECK(point_in_simplex(pti({2, 0}), tri, Containment::closed));
    CHECK_FALSE(point_in_simplex(pti({2, 0}), tri, Containment::open));

    CHECK_FALSE(point_in_simplex(pti({9, 9}), tri, Containment::closed));
    CHECK_FALSE(point_in_simplex(pti({9, 9}), tri, Containment::open));

    CHECK(thrown_code([&] { point_in_simplex(pti({0, 0, 0}), tri, Containment::closed); }) ==
          Errc::dimension_mismatch);
}

TEST_CASE("open membership in a lower-dimensional simplex is relative interior") {
    // A segment inside the plane: open membership means interior of the
    // segment within its own affine hull, not interior in the plane.
    Simplex seg = make_simplex({pti({0, 0}), pti({2, 2})}, 2);
    CHECK(point_in_simplex(pti({1, 1}), seg, Containment::open));
    CHECK(point_in_simplex(pti({1, 1}), seg, Containment::closed));
    CHECK_FALSE(point_in_simplex(pti({0, 0}), seg, Containment::open));
    CHECK(point_in_simplex(pti({0, 0}), seg, Containment::closed));
    CHECK_FALSE(point_in_simplex(pti({1, 0}), seg, Containment::open));
    CHECK_FALSE(point_in_simplex(pti({1, 0}), seg, Containment::closed));
}

TEST_CASE("open membership implies closed membership") {
    Rng rng(23);
    Simplex tri = make_simplex({pti({0, 0}), pti({5, 1}), pti({2, 6})}, 2);
    for (int t = 0; t < 200; ++t) {
        Point x = {Rational(rng.int_in(-2, 7)) + rng.signed_unit(), Rational(rng.int_in(-2, 7)) + rng.signed_unit()};
        if (point_in_simplex(x, tri, Containment::open)) {
            CHECK(point_in_simplex(x, tri, Containment::closed));
        }
    }
}

TEST_CASE("make_simplex canonicalizes vertex order and validates") {
    Simplex a = make_simplex({pti({4, 0}), pti({0, 0}), pti({0, 4})}, 2);
    Simplex b = make_simplex({pti({0, 4}), pti({4, 0}), pti({0, 0})}, 2);
    CHECK(a.vertices == b.vertices);
    CHECK(a.vertices[0] == pti({0, 0}));
    CHECK(a.dim() == 2);
    CHECK(a.ambient_dimension() == 2);

    CHECK(thrown_code([] { make_simplex({pti({0, 0}), pti({1, 1}), pti({2, 2})}, 2); }) ==
          Errc::degenerate_vertices);
    CHECK(thrown_code([] { make_simplex({pti({0, 0}), pti({1, 1}), pti({0, 1}), pti({1, 0})}, 2); }) ==
          Errc::dimension_mismatch);
}

TEST_CASE("verify_generic scans all subsets") {
    CHECK(verify_generic({pti({0, 0}), pti({1, 0}), pti({0, 1}), pti({3, 5})}, 2));
    CHECK_FALSE(verify_generic({pti({0, 0}), pti({1, 0}), pti({2, 0}), pti({0, 1})}, 2));
    CHECK_FALSE(verify_generic({pti({1, 2}), pti({1, 2})}, 2));
    CHECK(verify_generic({pti({1, 2}), pti({1, 3})}, 2));
}

TEST_CASE("centroid and spanning hyperplane") {
    CHECK(centroid_of({pti({0, 0}), pti({3, 0}), pti({0, 3})}) == pti({1, 1}));
    auto h = spanning_hyperplane({pti({0, 0}), pti({1, 0})});
    CHECK(h.side(pti({0, 0})) == 0);
    CHECK(h.side(pti({1, 0})) == 0);
    CHECK(h.side(pti({0, 1})) != 0);
}
