#include "pierce/extremal.hpp"

#include <algorithm>
#include <thread>

#include "pierce/errors.hpp"
#include "pierce/lp.hpp"

namespace pierce {

namespace {

// Walks all k-subsets of {0, ..., n-1} in lexicographic order.
template <typename Visitor>
void for_each_subset(int n, int k, Visitor&& visit) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
        visit(subset);
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
}

}  // namespace

HalvingReport halving_count(const PointSet& points) {
    const int n = static_cast<int>(points.points.size());
    const int d = points.dimension;
    if (d < 1) raise(Errc::invalid_argument, "dimension must be at least 1");
    if (n < d) raise(Errc::too_few_points, "need at least d points");

    HalvingReport report;
    report.n = n;
    report.d = d;
    const int threshold = (n - d + 1) / 2;  // ceil((n - d) / 2)

    std::vector<Point> tuple(d + 1);
    for_each_subset(n, d, [&](const std::vector<int>& subset) {
        for (int i = 0; i < d; ++i) tuple[i] = points.points[subset[i]];
        int positive = 0;
        int negative = 0;
        for (int p = 0; p < n; ++p) {
            if (std::binary_search(subset.begin(), subset.end(), p)) continue;
            tuple[d] = points.points[p];
            const int side = sign_of(orientation(tuple));
            if (side > 0) {
                ++positive;
            } else if (side < 0) {
                ++negative;
            } else {
                raise(Errc::degenerate_vertices, "point on a spanning hyperplane");
            }
        }
        if (positive <= threshold && negative <= threshold) {
            report.subsets.push_back(subset);
            report.side_counts.emplace_back(positive, negative);
        }
    });
    report.count = static_cast<long long>(report.subsets.size());
    return report;
}

KSetReport kset_count(const PointSet& points, int k, int threads) {
    const int n = static_cast<int>(points.points.size());
    const int d = points.dimension;
    if (d < 1) raise(Errc::invalid_argument, "dimension must be at least 1");
    if (k < 1 || k > n) raise(Errc::invalid_k, "need 1 <= k <= n");

    std::vector<std::vector<int>> subsets;
    for_each_subset(n, k, [&](const std::vector<int>& subset) { subsets.push_back(subset); });

    // A subset is separable exactly when some (a, b) puts it strictly above b
    // and its complement strictly below; variables are a_1..a_d, b.
    auto separable = [&](const std::vector<int>& subset) {
        std::vector<LinearConstraint> constraints;
        constraints.reserve(n);
        for (int p = 0; p < n; ++p) {
            const bool inside = std::binary_search(subset.begin(), subset.end(), p);
            LinearConstraint c;
            c.coeffs.reserve(d + 1);
            for (int col = 0; col < d; ++col) {
                c.coeffs.push_back(inside ? points.points[p][col] : -points.points[p][col]);
            }
            c.coeffs.push_back(inside ? Rational(-1) : Rational(1));
            c.rel = Rel::gt;
            c.bound = 0;
            constraints.push_back(std::move(c));
        }
        return linear_feasible(constraints, d + 1).feasible;
    };

    std::vector<char> keep(subsets.size(), 0);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(subsets.size())));
    auto worker = [&](int t) {
        for (std::size_t i = t; i < subsets.size(); i += threads) {
            keep[i] = separable(subsets[i]) ? 1 : 0;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    KSetReport report;
    report.n = n;
    report.d = d;
    report.k = k;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (keep[i]) report.subsets.push_back(std::move(subsets[i]));
    }
    report.count = static_cast<long long>(report.subsets.size());
    return report;
}

}  // namespace pierce
