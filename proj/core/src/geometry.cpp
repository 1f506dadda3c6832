#include "pierce/geometry.hpp"

#include <algorithm>

namespace pierce {

Rational OrientedHyperplane::eval(const Point& x) const {
    if (x.size() != normal.size()) raise(Errc::dimension_mismatch, "hyperplane eval dimension");
    Rational acc = -offset;
    for (std::size_t i = 0; i < normal.size(); ++i) acc += normal[i] * x[i];
    return acc;
}

OrientedHyperplane OrientedHyperplane::flipped() const {
    OrientedHyperplane out;
    out.normal.reserve(normal.size());
    for (const auto& c : normal) out.normal.push_back(-c);
    out.offset = -offset;
    return out;
}

OrientedHyperplane OrientedHyperplane::canonical() const {
    Rational scale;
    for (const auto& c : normal) {
        if (c != 0) {
            scale = abs(c);
            break;
        }
    }
    if (scale == 0) return *this;
    OrientedHyperplane out;
    out.normal.reserve(normal.size());
    for (const auto& c : normal) out.normal.push_back(c / scale);
    out.offset = offset / scale;
    return out;
}

Point Simplex::centroid() const { return centroid_of(vertices); }

Point centroid_of(const std::vector<Point>& points) {
    if (points.empty()) raise(Errc::invalid_argument, "centroid of no points");
    Point acc(points[0].size(), Rational(0));
    for (const auto& p : points) {
        if (p.size() != acc.size()) raise(Errc::dimension_mismatch, "centroid dimension");
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
    }
    const Rational inv(1, static_cast<long>(points.size()));
    for (auto& c : acc) c *= inv;
    return acc;
}

int points_dimension(const std::vector<Point>& points) {
    if (points.empty()) raise(Errc::invalid_argument, "empty point list");
    return static_cast<int>(points[0].size());
}

int orientation(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    if (n == 0) raise(Errc::dimension_mismatch, "orientation of no points");
    const std::size_t d = points[0].size();
    if (n != d + 1) raise(Errc::dimension_mismatch, "orientation needs exactly d+1 points");
    for (const auto& p : points) {
        if (p.size() != d) raise(Errc::dimension_mismatch, "orientation point dimension");
    }
    if (d == 1) {
        return sign_of(points[1][0] - points[0][0]);
    }
    if (d == 2) {
        // Same polynomial the generic elimination produces, just unrolled.
        const Rational ax = points[1][0] - points[0][0];
        const Rational ay = points[1][1] - points[0][1];
        const Rational bx = points[2][0] - points[0][0];
        const Rational by = points[2][1] - points[0][1];
        return sign_of(ax * by - ay * bx);
    }
    Matrix m(d + 1, std::vector<Rational>(d + 1));
    for (std::size_t col = 0; col <= d; ++col) {
        m[0][col] = 1;
        for (std::size_t row = 0; row < d; ++row) m[row + 1][col] = points[col][row];
    }
    return determinant_sign(m);
}

OrientedHyperplane spanning_hyperplane(const std::vector<Point>& support) {
    if (support.empty()) raise(Errc::dimension_mismatch, "empty support");
    const std::size_t d = support[0].size();
    if (support.size() != d) raise(Errc::dimension_mismatch, "support needs exactly d points");
    for (const auto& p : support) {
        if (p.size() != d) raise(Errc::dimension_mismatch, "support point dimension");
    }

    // f(x) = det [[1, 1...1], [x, p_1...p_d]] is affine in x; the normal is
    // the vector of partial derivatives (cofactors along the x column) and
    // the offset is -f(0).
    OrientedHyperplane h;
    h.normal.assign(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        // Minor: drop the ones row and coordinate row k from the x column.
        Matrix minor(d, std::vector<Rational>(d));
        for (std::size_t col = 0; col < d; ++col) {
            minor[0][col] = 1;
            std::size_t out_row = 1;
            for (std::size_t row = 0; row < d; ++row) {
                if (row == k) continue;
                minor[out_row][col] = support[col][row];
                ++out_row;
            }
        }
        const Rational cof = determinant(minor);
        // Cofactor sign for entry (k+1, 0): (-1)^(k+1).
        h.normal[k] = (k % 2 == 0) ? -cof : cof;
    }
    bool zero = true;
    for (const auto& c : h.normal) {
        if (c != 0) {
            zero = false;
            break;
        }
    }
    if (zero) raise(Errc::degenerate_support, "support points are affinely dependent");

    // f(0): determinant with x = 0.
    Matrix at_zero(d + 1, std::vector<Rational>(d + 1));
    at_zero[0][0] = 1;
    for (std::size_t row = 0; row < d; ++row) at_zero[row + 1][0] = 0;
    for (std::size_t col = 0; col < d; ++col) {
        at_zero[0][col + 1] = 1;
        for (std::size_t row = 0; row < d; ++row) at_zero[row + 1][col + 1] = support[col][row];
    }
    h.offset = -determinant(at_zero);
    return h;
}

OrientedHyperplane hyperplane_through(const std::vector<Point>& support, const Point& witness) {
    OrientedHyperplane h = spanning_hyperplane(support);
    if (witness.size() != h.normal.size()) {
        raise(Errc::dimension_mismatch, "witness dimension");
    }
    const int s = h.side(witness);
    if (s == 0) raise(Errc::witness_on_hyperplane, "witness lies on the spanned hyperplane");
    return s > 0 ? h : h.flipped();
}

bool affinely_independent(const std::vector<Point>& points, int dimension) {
    const std::size_t k = points.size();
    if (k == 0) return false;
    if (k > static_cast<std::size_t>(dimension) + 1) return false;
    // Rank of the (d+1) x k matrix [[1],[p]] must be k.
    Matrix a(dimension + 1, std::vector<Rational>(k));
    for (std::size_t col = 0; col < k; ++col) {
        if (points[col].size() != static_cast<std::size_t>(dimension)) {
            raise(Errc::dimension_mismatch, "point dimension");
        }
        a[0][col] = 1;
        for (int row = 0; row < dimension; ++row) a[row + 1][col] = points[col][row];
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        const Rational inv = Rational(1) / a[rank][col];
        for (std::size_t j = col; j < k; ++j) a[rank][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank == k;
}

Simplex make_simplex(std::vector<Point> vertices, int ambient_dimension) {
    if (vertices.empty()) raise(Errc::invalid_argument, "simplex needs at least one vertex");
    if (vertices.size() > static_cast<std::size_t>(ambient_dimension) + 1) {
        raise(Errc::dimension_mismatch, "too many simplex vertices for the ambient dimension");
    }
    for (const auto& v : vertices) {
        if (v.size() != static_cast<std::size_t>(ambient_dimension)) {
            raise(Errc::dimension_mismatch, "simplex vertex dimension");
        }
    }
    if (!affinely_independent(vertices, ambient_dimension)) {
        raise(Errc::degenerate_vertices, "simplex vertices are affinely dependent");
    }
    std::sort(vertices.begin(), vertices.end());
    return Simplex{std::move(vertices)};
}

bool point_in_simplex(const Point& x, const Simplex& simplex, Containment mode) {
    const std::size_t k = simplex.vertices.size();
    if (k == 0) raise(Errc::invalid_argument, "empty simplex");
    const std::size_t d = simplex.vertices[0].size();
    if (x.size() != d) raise(Errc::dimension_mismatch, "point/simplex dimension");

    // Barycentric system: [ [1...1]; V ] lambda = [1; x].
    Matrix a(d + 1, std::vector<Rational>(k));
    std::vector<Rational> b(d + 1);
    for (std::size_t col = 0; col < k; ++col) {
        a[0][col] = 1;
        for (std::size_t row = 0; row < d; ++row) a[row + 1][col] = simplex.vertices[col][row];
    }
    b[0] = 1;
    for (std::size_t row = 0; row < d; ++row) b[row + 1] = x[row];

    auto solved = solve_linear(std::move(a), std::move(b));
    if (!solved) return false;  // x is outside the affine hull
    if (!solved->unique) raise(Errc::degenerate_vertices, "simplex vertices are affinely dependent");
    for (const auto& lambda : solved->solution) {
        if (mode == Containment::open ? lambda <= 0 : lambda < 0) return false;
    }
    return true;
}

namespace {

bool scan_generic(const std::vector<Point>& points, int dimension, std::vector<int>& pick,
                  std::size_t start, std::vector<Point>& tuple) {
    if (pick.size() == static_cast<std::size_t>(dimension) + 1) {
        tuple.clear();
        for (int idx : pick) tuple.push_back(points[idx]);
        return orientation(tuple) != 0;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
        pick.push_back(static_cast<int>(i));
        if (!scan_generic(points, dimension, pick, i + 1, tuple)) return false;
        pick.pop_back();
    }
    return true;
}

}  // namespace

bool verify_generic(const std::vector<Point>& points, int dimension) {
    for (const auto& p : points) {
        if (p.size() != static_cast<std::size_t>(dimension)) {
            raise(Errc::dimension_mismatch, "point dimension");
        }
    }
    if (points.size() < static_cast<std::size_t>(dimension) + 1) {
        // Still reject coincident points, which a (d+1)-scan would miss.
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                if (points[i] == points[j]) return false;
            }
        }
        return true;
    }
    std::vector<int> pick;
    std::vector<Point> tuple;
    return scan_generic(points, dimension, pick, 0, tuple);
}

}  // namespace pierce
