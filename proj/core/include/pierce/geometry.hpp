#pragma once

#include <optional>
#include <vector>

#include "pierce/rational.hpp"

namespace pierce {

using Point = std::vector<Rational>;

struct PointSet {
    int dimension = 0;
    std::vector<Point> points;
    bool generic = false;  // set by an orientation scan, see verify_generic
};

// Oriented hyperplane {x : normal·x = offset}; the positive side is
// {x : normal·x > offset}.
struct OrientedHyperplane {
    std::vector<Rational> normal;
    Rational offset;

    Rational eval(const Point& x) const;
    int side(const Point& x) const { return sign_of(eval(x)); }
    OrientedHyperplane flipped() const;

    // Scaled so the first nonzero normal entry has absolute value one. The
    // scaling factor is positive, so orientation is preserved; equal
    // canonical forms mean equal oriented hyperplanes.
    OrientedHyperplane canonical() const;

    bool operator==(const OrientedHyperplane& other) const = default;
};

// k-simplex given by k+1 affinely independent vertices in R^d, 0 <= k <= d.
// Vertices are kept in lexicographic order, so equal simplices compare equal.
struct Simplex {
    std::vector<Point> vertices;

    int ambient_dimension() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    Point centroid() const;
};

enum class Containment { open, closed };

// Sign of det [[1 ... 1], [p_0 ... p_d]] for exactly d+1 points in R^d.
int orientation(const std::vector<Point>& points);

// Hyperplane spanned by d affinely independent points, oriented so the
// witness lies strictly on the positive side.
OrientedHyperplane hyperplane_through(const std::vector<Point>& support, const Point& witness);

// Unoriented spanning hyperplane (the cofactor form); DegenerateSupport when
// the support is affinely dependent.
OrientedHyperplane spanning_hyperplane(const std::vector<Point>& support);

// Exact barycentric membership test. Open containment means membership in the
// relative interior within the affine hull of the simplex.
bool point_in_simplex(const Point& x, const Simplex& simplex, Containment mode);

// Validates vertex count, dimensions, and affine independence, and sorts
// vertices into canonical order.
Simplex make_simplex(std::vector<Point> vertices, int ambient_dimension);

// Scans every (d+1)-subset for a zero orientation. O(n^(d+1)); intended for
// desk-scale inputs and test fixtures.
bool verify_generic(const std::vector<Point>& points, int dimension);

bool affinely_independent(const std::vector<Point>& points, int dimension);

Point centroid_of(const std::vector<Point>& points);

int points_dimension(const std::vector<Point>& points);

}  // namespace pierce
