#include "pierce/lp.hpp"

#include <cstddef>

namespace pierce {

namespace {

enum class LpStatus { optimal, unbounded, infeasible };

struct StandardResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> solution;  // length n
    Rational value;
    std::vector<Rational> duals;  // length m, w.r.t. rows as given
};

// Two-phase dense tableau simplex with Bland's rule for
//   max c·z  s.t.  A z = b,  z >= 0.
// The tableau carries one artificial column per row; their reduced costs at
// optimality yield the duals.
class StandardSimplex {
  public:
    StandardSimplex(Matrix a, std::vector<Rational> b, std::vector<Rational> c)
        : m_(a.size()), n_(c.size()), cost_(std::move(c)) {
        flip_.assign(m_, 1);
        tab_.assign(m_ + 1, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        for (std::size_t i = 0; i < m_; ++i) {
            if (a[i].size() != n_) raise(Errc::invalid_argument, "lp shape mismatch");
            const bool flip = b[i] < 0;
            if (flip) flip_[i] = -1;
            for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = flip ? -a[i][j] : a[i][j];
            tab_[i][n_ + i] = 1;  // artificial
            tab_[i][n_ + m_] = flip ? -b[i] : b[i];
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) basis_[i] = static_cast<int>(n_ + i);
    }

    StandardResult solve() {
        // Phase 1: maximize -(sum of artificials).
        auto& obj = tab_[m_];
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (std::size_t i = 0; i < m_; ++i) obj[n_ + i] = -1;
        for (std::size_t i = 0; i < m_; ++i) add_row_multiple(obj, tab_[i], Rational(1));
        run(/*allow_artificials=*/true);
        if (obj[n_ + m_] != 0) {
            // Optimum of phase 1 below zero: some artificial stuck positive.
            return StandardResult{LpStatus::infeasible, {}, Rational(0), {}};
        }
        drive_out_artificials();

        // Phase 2: the real objective, artificials barred from entering.
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (std::size_t j = 0; j < n_; ++j) obj[j] = cost_[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_) && cost_[basis_[i]] != 0) {
                add_row_multiple(obj, tab_[i], -cost_[basis_[i]]);
            }
        }
        if (!run(/*allow_artificials=*/false)) {
            return StandardResult{LpStatus::unbounded, {}, Rational(0), {}};
        }

        StandardResult result;
        result.status = LpStatus::optimal;
        result.solution.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_)) {
                result.solution[basis_[i]] = tab_[i][n_ + m_];
            }
        }
        result.value = -obj[n_ + m_];
        result.duals.assign(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            // Reduced cost of artificial i equals -y_i (its phase-2 cost is 0).
            result.duals[i] = Rational(flip_[i]) * -obj[n_ + i];
        }
        return result;
    }

  private:
    static void add_row_multiple(std::vector<Rational>& target, const std::vector<Rational>& source,
                                 const Rational& factor) {
        for (std::size_t j = 0; j < target.size(); ++j) {
            if (source[j] != 0) target[j] += factor * source[j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tab_[row];
        const Rational inv = Rational(1) / pr[col];
        for (auto& v : pr) v *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            add_row_multiple(tab_[i], pr, -tab_[i][col]);
            tab_[i][col] = 0;  // clear residue exactly
        }
        basis_[row] = static_cast<int>(col);
    }

    // Returns false when unbounded.
    bool run(bool allow_artificials) {
        const std::size_t limit = allow_artificials ? n_ + m_ : n_;
        auto& obj = tab_[m_];
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {  // Bland: smallest index
                if (obj[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;  // optimal
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][n_ + m_] / tab_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_)) continue;
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            // All-zero row over the real columns: redundant constraint; the
            // artificial stays basic at value zero and is barred in phase 2.
            if (col < n_) pivot(i, col);
        }
    }

    std::size_t m_, n_;
    std::vector<Rational> cost_;
    Matrix tab_;  // m_ constraint rows + 1 objective row
    std::vector<int> basis_;
    std::vector<int> flip_;
};

void validate(const std::vector<LinearConstraint>& constraints, int num_vars) {
    if (num_vars <= 0) raise(Errc::invalid_argument, "linear_feasible needs at least one variable");
    for (const auto& c : constraints) {
        if (c.coeffs.size() != static_cast<std::size_t>(num_vars)) {
            raise(Errc::dimension_mismatch, "constraint arity mismatch");
        }
    }
}

}  // namespace

namespace detail {

bool check_witness(const std::vector<LinearConstraint>& constraints, const Point& witness) {
    for (const auto& c : constraints) {
        Rational lhs(0);
        for (std::size_t k = 0; k < c.coeffs.size(); ++k) lhs += c.coeffs[k] * witness[k];
        switch (c.rel) {
            case Rel::eq:
                if (lhs != c.bound) return false;
                break;
            case Rel::ge:
                if (lhs < c.bound) return false;
                break;
            case Rel::gt:
                if (lhs <= c.bound) return false;
                break;
        }
    }
    return true;
}

// Direct formulation: variables split into positive parts, one shared strict
// slack tau maximized subject to tau <= 1.
FeasibleResult linear_feasible_primal(const std::vector<LinearConstraint>& constraints, int num_vars) {
    validate(constraints, num_vars);
    const std::size_t n = static_cast<std::size_t>(num_vars);
    const std::size_t m = constraints.size();
    // Columns: u_0..u_{n-1}, v_0..v_{n-1}, tau, s_0..s_{m-1} (slack per
    // inequality row; unused for eq rows), s_cap.
    const std::size_t cols = 2 * n + 1 + m + 1;
    const std::size_t tau = 2 * n;
    Matrix a(m + 1, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        for (std::size_t k = 0; k < n; ++k) {
            a[i][k] = c.coeffs[k];
            a[i][n + k] = -c.coeffs[k];
        }
        if (c.rel != Rel::eq) a[i][2 * n + 1 + i] = -1;
        if (c.rel == Rel::gt) a[i][tau] = -1;
        b[i] = c.bound;
    }
    a[m][tau] = 1;
    a[m][cols - 1] = 1;
    b[m] = 1;
    std::vector<Rational> cost(cols, Rational(0));
    cost[tau] = 1;

    StandardSimplex solver(std::move(a), std::move(b), std::move(cost));
    StandardResult res = solver.solve();
    if (res.status != LpStatus::optimal || res.value <= 0) return FeasibleResult{false, std::nullopt};
    Point witness(n);
    for (std::size_t k = 0; k < n; ++k) witness[k] = res.solution[k] - res.solution[n + k];
    if (!check_witness(constraints, witness)) {
        raise(Errc::invalid_argument, "internal: primal simplex produced an invalid witness");
    }
    return FeasibleResult{true, std::move(witness)};
}

// Dual formulation, preferable when constraints vastly outnumber variables.
// The primal is max tau s.t. a_j·x - sigma_j tau >= b_j (sigma marks strict
// rows), eq rows exact, tau <= 1; its dual has only num_vars+1 rows. The
// primal optimum is recovered from the dual multipliers and re-verified; on
// any mismatch we fall back to the primal path.
FeasibleResult linear_feasible_dual(const std::vector<LinearConstraint>& constraints, int num_vars) {
    validate(constraints, num_vars);
    const std::size_t n = static_cast<std::size_t>(num_vars);
    const std::size_t m = constraints.size();

    std::size_t eq_count = 0;
    for (const auto& c : constraints) {
        if (c.rel == Rel::eq) ++eq_count;
    }
    // Dual variables: y_j >= 0 per inequality row, mu_j = mu+ - mu- per eq
    // row, w >= 0 for the tau cap. Dual constraints: one per primal variable.
    const std::size_t cols = (m - eq_count) + 2 * eq_count + 1;
    Matrix a(n + 1, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    std::vector<Rational> cost(cols, Rational(0));

    std::size_t col = 0;
    std::vector<std::size_t> col_of_row(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& c = constraints[j];
        col_of_row[j] = col;
        if (c.rel == Rel::eq) {
            for (std::size_t k = 0; k < n; ++k) {
                a[k][col] = c.coeffs[k];
                a[k][col + 1] = -c.coeffs[k];
            }
            cost[col] = -c.bound;  // minimized objective, negated for max
            cost[col + 1] = c.bound;
            col += 2;
        } else {
            for (std::size_t k = 0; k < n; ++k) a[k][col] = -c.coeffs[k];
            if (c.rel == Rel::gt) a[n][col] = 1;
            cost[col] = c.bound;  // min (-b_j) y_j  ->  max b_j y_j
            col += 1;
        }
    }
    a[n][cols - 1] = 1;  // w
    b[n] = 1;
    cost[cols - 1] = -1;

    StandardSimplex solver(std::move(a), std::move(b), std::move(cost));
    StandardResult res = solver.solve();
    if (res.status == LpStatus::infeasible) {
        // (y, mu, w) = (0, 0, 1) is always feasible; reaching here is a bug.
        raise(Errc::invalid_argument, "internal: dual lp reported infeasible");
    }
    if (res.status == LpStatus::unbounded) {
        // Dual unbounded below <=> primal (the original system, with strict
        // rows relaxed) infeasible.
        return FeasibleResult{false, std::nullopt};
    }
    const Rational tau_star = -res.value;  // dual min == primal max
    if (tau_star <= 0) return FeasibleResult{false, std::nullopt};
    Point witness(n);
    for (std::size_t k = 0; k < n; ++k) witness[k] = -res.duals[k];
    if (!check_witness(constraints, witness)) {
        return linear_feasible_primal(constraints, num_vars);
    }
    return FeasibleResult{true, std::move(witness)};
}

}  // namespace detail

FeasibleResult linear_feasible(const std::vector<LinearConstraint>& constraints, int num_vars) {
    validate(constraints, num_vars);
    if (constraints.size() > static_cast<std::size_t>(num_vars) + 8) {
        return detail::linear_feasible_dual(constraints, num_vars);
    }
    return detail::linear_feasible_primal(constraints, num_vars);
}

FeasibleResult halfspaces_feasible(const std::vector<OrientedHyperplane>& halfspaces, bool strict) {
    if (halfspaces.empty()) raise(Errc::invalid_argument, "no halfspaces");
    const int d = static_cast<int>(halfspaces[0].normal.size());
    std::vector<LinearConstraint> constraints;
    constraints.reserve(halfspaces.size());
    for (const auto& h : halfspaces) {
        if (h.normal.size() != static_cast<std::size_t>(d)) {
            raise(Errc::dimension_mismatch, "halfspace dimension");
        }
        constraints.push_back({h.normal, strict ? Rel::gt : Rel::ge, h.offset});
    }
    return linear_feasible(constraints, d);
}

}  // namespace pierce
