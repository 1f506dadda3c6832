#pragma once

#include <cstdint>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/rational.hpp"

namespace pierce {

// One term of a multivariate polynomial over the concatenated block
// coordinates: coefficient * prod_i x_i^exponents[i].
struct Monomial {
    Rational coefficient;
    std::vector<int> exponents;
};

// A polynomial is a plain sum of monomials. The exponent vectors must all
// have the relation's total coordinate count.
struct Polynomial {
    std::vector<Monomial> monomials;

    // Largest total degree over the monomials, 0 for the zero polynomial.
    int degree() const noexcept;
};

Rational eval_polynomial(const Polynomial& poly, const std::vector<Rational>& coords);

// Boolean combination over sign atoms; atom t stands for "polys[t] <= 0".
struct Formula {
    enum class Kind { constant, atom, negation, conjunction, disjunction };

    Kind kind = Kind::constant;
    bool value = false;             // constant
    int atom = -1;                  // atom
    std::vector<Formula> children;  // negation (one child) and junctions

    static Formula constant_of(bool v);
    static Formula atom_leq(int index);
    static Formula negation_of(Formula f);
    static Formula all_of(std::vector<Formula> fs);
    static Formula any_of(std::vector<Formula> fs);
};

bool eval_formula(const Formula& formula, const std::vector<bool>& atoms);

// How membership is decided. Most relations evaluate their sign formula
// directly; the loose-family relation additionally decides an existential
// condition by exact feasibility, which no quantifier-free combination of
// the stored atoms can express.
enum class RelationEvaluator { sign_formula, loose_family };

// A k-partite edge relation cut out by polynomial sign conditions on the
// concatenation of one point per vertex class.
struct SemiAlgRelation {
    std::vector<int> block_dims;
    std::vector<Polynomial> polys;
    Formula formula;
    int degree = 0;
    RelationEvaluator evaluator = RelationEvaluator::sign_formula;
    int loose_dimension = 0;  // ambient d when evaluator == loose_family

    int total_dims() const noexcept;
};

// Exact membership test for one point per block.
bool eval_relation(const SemiAlgRelation& rel, const std::vector<Point>& tuple);

// Two-block relation between equal-dimensional classes: edge exactly when
// normal . (v1 - v2) > 0.
SemiAlgRelation halfspace_relation(const std::vector<Rational>& normal);

// Relation over d+1 blocks of dimension d*d, one block per (d-1)-simplex
// encoded via encode_simplex_block, that holds exactly when the simplices
// form a loose family. The stored atoms are the orientation determinants of
// one vertex per block; their sign pattern decides separation directly and
// is cross-checked against the full classification on every evaluation.
SemiAlgRelation loose_relation(int d);

// Flatten a simplex (d affinely independent points in R^d) into a single
// block point: vertices sorted lexicographically, coordinates concatenated.
Point encode_simplex_block(std::vector<Point> vertices, int d);

struct ShatterObservation {
    int m = 0;
    long long traces = 0;
};

struct ShatterEstimate {
    std::vector<ShatterObservation> ladder;  // doubling subset sizes up to m
    long long max_traces = 0;                // distinct traces at the queried m
    double fitted_exponent = 0.0;            // log-log slope across the ladder
};

// Empirical lower bound on the number of distinct left-neighborhood traces
// over m-subsets of the ground set. Subsets are drawn nested within each
// trial, so the observed counts are monotone in m by construction.
ShatterEstimate estimate_shatter(const SemiAlgRelation& rel, const PointSet& ground, int m,
                                 int trials, std::uint64_t seed);

}  // namespace pierce
