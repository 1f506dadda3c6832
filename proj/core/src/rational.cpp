#include "pierce/rational.hpp"

#include <cctype>

namespace pierce {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.find('/') != std::string_view::npos) {
            raise(Errc::parse_error, "multiple '/' in rational literal '" + std::string(text) + "'");
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        raise(Errc::parse_error, "bad numerator in rational literal '" + std::string(text) + "'");
    }
    Integer p{std::string(digits)};
    if (!num.empty() && num.front() == '-') p = -p;
    Integer q = 1;
    if (!den.empty() || text.find('/') != std::string_view::npos) {
        if (!all_digits(den)) {
            raise(Errc::parse_error, "bad denominator in rational literal '" + std::string(text) + "'");
        }
        q = Integer(std::string(den));
        if (q == 0) {
            raise(Errc::parse_error, "zero denominator in rational literal '" + std::string(text) + "'");
        }
    }
    return Rational(p, q);
}

std::string format_rational(const Rational& value) {
    Integer num = numerator(value);
    Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer bareiss_determinant(std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Integer(1);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Integer(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                // Exact by the Bareiss identity; divide_qr avoids a gcd pass.
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    return sign < 0 ? Integer(-det) : det;
}

namespace {

// Clears denominators column-wise. Each column is scaled by a positive
// integer, so the determinant sign is preserved and the value is recovered by
// dividing by the product of the scalings.
Integer clear_denominators(const Matrix& m, std::vector<std::vector<Integer>>& out) {
    const std::size_t n = m.size();
    out.assign(n, std::vector<Integer>(n));
    Integer total_scale = 1;
    for (std::size_t j = 0; j < n; ++j) {
        Integer scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
            scale = lcm(scale, Integer(denominator(m[i][j])));
        }
        for (std::size_t i = 0; i < n; ++i) {
            out[i][j] = Integer(numerator(m[i][j])) * (scale / Integer(denominator(m[i][j])));
        }
        total_scale *= scale;
    }
    return total_scale;
}

}  // namespace

Rational determinant(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) raise(Errc::invalid_argument, "determinant of non-square matrix");
    }
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    std::vector<std::vector<Integer>> im;
    Integer scale = clear_denominators(m, im);
    Integer det = bareiss_determinant(im);
    return Rational(det, scale);
}

int determinant_sign(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) raise(Errc::invalid_argument, "determinant of non-square matrix");
    }
    if (n == 0) return 1;
    if (n == 1) return sign_of(m[0][0]);
    if (n == 2) return sign_of(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    std::vector<std::vector<Integer>> im;
    clear_denominators(m, im);
    Integer det = bareiss_determinant(im);
    return det.sign();
}

std::optional<LinearSolve> solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) raise(Errc::invalid_argument, "linear solve shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != cols) raise(Errc::invalid_argument, "ragged linear system");
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
            b[i] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i) {
        if (b[i] != 0) return std::nullopt;  // inconsistent
    }
    LinearSolve result;
    result.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        result.solution[pivot_col_of_row[i]] = b[i];
    }
    result.unique = pivot_col_of_row.size() == cols;
    return result;
}

Integer ceil_rational(const Rational& value) {
    Integer num = numerator(value);
    Integer den = denominator(value);
    Integer q = num / den;
    if (num > 0 && q * den != num) q += 1;
    return q;
}

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::degenerate_support: return "DegenerateSupport";
        case Errc::witness_on_hyperplane: return "WitnessOnHyperplane";
        case Errc::degenerate_vertices: return "DegenerateVertices";
        case Errc::retry_exhausted: return "RetryExhausted";
        case Errc::not_separated: return "NotSeparated";
        case Errc::not_pinned: return "NotPinned";
        case Errc::not_loose: return "NotLoose";
        case Errc::no_transversal: return "NoTransversal";
        case Errc::invalid_r: return "InvalidR";
        case Errc::invalid_k: return "InvalidK";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::empty_color_class: return "EmptyColorClass";
        case Errc::insufficient_points: return "InsufficientPoints";
        case Errc::too_few_points: return "TooFewPoints";
        case Errc::clique_not_found: return "CliqueNotFound";
        case Errc::unsupported_dimension: return "UnsupportedDimension";
        case Errc::empty_edge_set: return "EmptyEdgeSet";
        case Errc::density_too_low: return "DensityTooLow";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace pierce
