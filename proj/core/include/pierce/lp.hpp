#pragma once

#include <optional>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/rational.hpp"

namespace pierce {

enum class Rel { eq, ge, gt };  // coeffs·x  =  |  >=  |  >  bound

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rel rel = Rel::ge;
    Rational bound;
};

struct FeasibleResult {
    bool feasible = false;
    std::optional<Point> witness;  // present iff feasible; exactly re-verified
};

// Exact feasibility of a mixed {=, >=, >} system over free rational
// variables. Strict rows are handled by one shared positive slack that the
// simplex maximizes (Bland's rule, two phases); the system is feasible iff
// the optimum of that slack is positive. Any returned witness has been
// substituted back into every constraint.
//
// The solver runs on the primal formulation when the system is small and on
// its dual when there are many more constraints than variables; both paths
// produce identical answers and the choice is purely about speed.
FeasibleResult linear_feasible(const std::vector<LinearConstraint>& constraints, int num_vars);

namespace detail {

// Exposed for cross-checking in tests.
FeasibleResult linear_feasible_primal(const std::vector<LinearConstraint>& constraints, int num_vars);
FeasibleResult linear_feasible_dual(const std::vector<LinearConstraint>& constraints, int num_vars);

bool check_witness(const std::vector<LinearConstraint>& constraints, const Point& witness);

}  // namespace detail

// Convenience: strict/closed feasibility of half-space systems
// {h.normal·x > h.offset} (or >=) used by the family analysis code.
FeasibleResult halfspaces_feasible(const std::vector<OrientedHyperplane>& halfspaces, bool strict);

}  // namespace pierce
