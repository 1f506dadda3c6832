#include "pierce/relation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "pierce/errors.hpp"
#include "pierce/family.hpp"
#include "pierce/random.hpp"

namespace pierce {

int Polynomial::degree() const noexcept {
    int best = 0;
    for (const auto& monomial : monomials) {
        int total = 0;
        for (int e : monomial.exponents) total += e;
        best = std::max(best, total);
    }
    return best;
}

Rational eval_polynomial(const Polynomial& poly, const std::vector<Rational>& coords) {
    Rational sum = 0;
    for (const auto& monomial : poly.monomials) {
        if (monomial.exponents.size() != coords.size()) {
            raise(Errc::dimension_mismatch, "monomial exponent count vs coordinates");
        }
        Rational term = monomial.coefficient;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            for (int e = 0; e < monomial.exponents[i]; ++e) term *= coords[i];
        }
        sum += term;
    }
    return sum;
}

Formula Formula::constant_of(bool v) {
    Formula f;
    f.kind = Kind::constant;
    f.value = v;
    return f;
}

Formula Formula::atom_leq(int index) {
    Formula f;
    f.kind = Kind::atom;
    f.atom = index;
    return f;
}

Formula Formula::negation_of(Formula inner) {
    Formula f;
    f.kind = Kind::negation;
    f.children.push_back(std::move(inner));
    return f;
}

Formula Formula::all_of(std::vector<Formula> fs) {
    Formula f;
    f.kind = Kind::conjunction;
    f.children = std::move(fs);
    return f;
}

Formula Formula::any_of(std::vector<Formula> fs) {
    Formula f;
    f.kind = Kind::disjunction;
    f.children = std::move(fs);
    return f;
}

bool eval_formula(const Formula& formula, const std::vector<bool>& atoms) {
    switch (formula.kind) {
        case Formula::Kind::constant: return formula.value;
        case Formula::Kind::atom:
            if (formula.atom < 0 || formula.atom >= static_cast<int>(atoms.size())) {
                raise(Errc::invalid_argument, "formula references a missing atom");
            }
            return atoms[formula.atom];
        case Formula::Kind::negation:
            if (formula.children.size() != 1) {
                raise(Errc::invalid_argument, "negation needs exactly one child");
            }
            return !eval_formula(formula.children.front(), atoms);
        case Formula::Kind::conjunction:
            for (const auto& child : formula.children) {
                if (!eval_formula(child, atoms)) return false;
            }
            return true;
        case Formula::Kind::disjunction:
            for (const auto& child : formula.children) {
                if (eval_formula(child, atoms)) return true;
            }
            return false;
    }
    raise(Errc::invalid_argument, "unknown formula node");
}

int SemiAlgRelation::total_dims() const noexcept {
    return std::accumulate(block_dims.begin(), block_dims.end(), 0);
}

namespace {

// Decides looseness of the encoded simplices. The stored determinant atoms
// settle separation on their own; the feasibility route inside the family
// classification must agree with them, and a disagreement is a bug.
bool eval_loose(const SemiAlgRelation& rel, const std::vector<Rational>& coords) {
    const int d = rel.loose_dimension;
    std::vector<Simplex> members;
    std::set<Point> seen;
    for (std::size_t block = 0; block < rel.block_dims.size(); ++block) {
        std::vector<Point> vertices;
        for (int j = 0; j < d; ++j) {
            Point v(coords.begin() + static_cast<long>(block * d * d + j * d),
                    coords.begin() + static_cast<long>(block * d * d + (j + 1) * d));
            // A repeated vertex anywhere is data degeneracy, not a malformed
            // call: the encoding assumes pairwise distinct vertices.
            if (!seen.insert(v).second) {
                raise(Errc::degenerate_vertices, "encoded simplices share a vertex");
            }
            vertices.push_back(std::move(v));
        }
        members.push_back(make_simplex(std::move(vertices), d));
    }
    const FamilyClass kind = classify_family(make_family(d, std::move(members)));

    std::vector<bool> atoms;
    atoms.reserve(rel.polys.size());
    for (const auto& poly : rel.polys) atoms.push_back(eval_polynomial(poly, coords) <= 0);
    const bool separated = eval_formula(rel.formula, atoms);
    if (separated != (kind != FamilyClass::crossed)) {
        throw std::logic_error("separation sign pattern disagrees with the family classification");
    }
    return kind == FamilyClass::loose;
}

}  // namespace

bool eval_relation(const SemiAlgRelation& rel, const std::vector<Point>& tuple) {
    if (tuple.size() != rel.block_dims.size()) {
        raise(Errc::dimension_mismatch, "one point per relation block");
    }
    std::vector<Rational> coords;
    coords.reserve(rel.total_dims());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (static_cast<int>(tuple[i].size()) != rel.block_dims[i]) {
            raise(Errc::dimension_mismatch, "block point dimension");
        }
        coords.insert(coords.end(), tuple[i].begin(), tuple[i].end());
    }

    if (rel.evaluator == RelationEvaluator::loose_family) return eval_loose(rel, coords);

    std::vector<bool> atoms;
    atoms.reserve(rel.polys.size());
    for (const auto& poly : rel.polys) atoms.push_back(eval_polynomial(poly, coords) <= 0);
    return eval_formula(rel.formula, atoms);
}

SemiAlgRelation halfspace_relation(const std::vector<Rational>& normal) {
    if (normal.empty()) raise(Errc::invalid_argument, "halfspace normal must be nonempty");
    const int d = static_cast<int>(normal.size());

    Polynomial poly;
    for (int i = 0; i < d; ++i) {
        if (normal[i] == 0) continue;
        Monomial plus{normal[i], std::vector<int>(2 * d, 0)};
        plus.exponents[i] = 1;
        poly.monomials.push_back(std::move(plus));
        Monomial minus{-normal[i], std::vector<int>(2 * d, 0)};
        minus.exponents[d + i] = 1;
        poly.monomials.push_back(std::move(minus));
    }

    SemiAlgRelation rel;
    rel.block_dims = {d, d};
    rel.polys.push_back(std::move(poly));
    rel.formula = Formula::negation_of(Formula::atom_leq(0));
    rel.degree = 1;
    return rel;
}

namespace {

// Orientation determinant of one chosen vertex per block, expanded over
// permutations into monomials of degree d. `choice[i]` is the vertex index
// inside block i.
Polynomial orientation_atom(int d, const std::vector<int>& choice) {
    const int total = (d + 1) * d * d;
    Polynomial poly;
    std::vector<int> column(d + 1);
    for (int i = 0; i <= d; ++i) column[i] = i;
    do {
        int inversions = 0;
        for (int a = 0; a <= d; ++a) {
            for (int b = a + 1; b <= d; ++b) inversions += column[a] > column[b];
        }
        // Row 0 of the determinant is all ones; rows 1..d hold coordinates of
        // the chosen vertices, so the term collects one coordinate per row.
        Monomial monomial{(inversions % 2 == 0) ? Rational(1) : Rational(-1),
                          std::vector<int>(total, 0)};
        for (int row = 1; row <= d; ++row) {
            const int block = column[row];
            monomial.exponents[block * d * d + choice[block] * d + (row - 1)] += 1;
        }
        poly.monomials.push_back(std::move(monomial));
    } while (std::next_permutation(column.begin(), column.end()));
    return poly;
}

}  // namespace

SemiAlgRelation loose_relation(int d) {
    if (d < 2) raise(Errc::invalid_argument, "the loose relation needs d >= 2");

    SemiAlgRelation rel;
    rel.block_dims.assign(d + 1, d * d);
    rel.degree = d;
    rel.evaluator = RelationEvaluator::loose_family;
    rel.loose_dimension = d;

    // One atom per choice of one vertex per block, in odometer order.
    std::vector<int> choice(d + 1, 0);
    while (true) {
        rel.polys.push_back(orientation_atom(d, choice));
        int i = d;
        while (i >= 0 && choice[i] == d - 1) choice[i--] = 0;
        if (i < 0) break;
        ++choice[i];
    }

    // Separation: every determinant has the same strict sign. Under joint
    // genericity no atom vanishes, so "all <= 0" means "all negative".
    std::vector<Formula> negatives;
    std::vector<Formula> positives;
    for (std::size_t t = 0; t < rel.polys.size(); ++t) {
        negatives.push_back(Formula::atom_leq(static_cast<int>(t)));
        positives.push_back(Formula::negation_of(Formula::atom_leq(static_cast<int>(t))));
    }
    rel.formula = Formula::any_of(
        {Formula::all_of(std::move(negatives)), Formula::all_of(std::move(positives))});
    return rel;
}

Point encode_simplex_block(std::vector<Point> vertices, int d) {
    if (static_cast<int>(vertices.size()) != d) {
        raise(Errc::invalid_argument, "a block encodes exactly d vertices");
    }
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != d) raise(Errc::dimension_mismatch, "vertex dimension");
    }
    std::sort(vertices.begin(), vertices.end());
    Point block;
    block.reserve(static_cast<std::size_t>(d) * d);
    for (const auto& v : vertices) block.insert(block.end(), v.begin(), v.end());
    return block;
}

ShatterEstimate estimate_shatter(const SemiAlgRelation& rel, const PointSet& ground, int m,
                                 int trials, std::uint64_t seed) {
    if (rel.block_dims.size() != 2) {
        raise(Errc::invalid_argument, "shatter estimation needs a two-block relation");
    }
    if (ground.dimension != rel.block_dims[1]) {
        raise(Errc::dimension_mismatch, "ground dimension vs right block");
    }
    const int n = static_cast<int>(ground.points.size());
    if (m < 1 || m > n) raise(Errc::invalid_argument, "need 1 <= m <= |ground|");
    if (trials < 1) raise(Errc::invalid_argument, "need at least one trial");

    const int d1 = rel.block_dims[0];

    // Sample box: the ground's bounding box inflated by half its span when
    // the left block lives in the same dimension, a fixed box otherwise.
    std::vector<Rational> lo(d1, Rational(-256)), hi(d1, Rational(256));
    if (d1 == ground.dimension) {
        for (int c = 0; c < d1; ++c) {
            lo[c] = hi[c] = ground.points.front()[c];
            for (const auto& p : ground.points) {
                if (p[c] < lo[c]) lo[c] = p[c];
                if (p[c] > hi[c]) hi[c] = p[c];
            }
            Rational pad = (hi[c] - lo[c]) / 2;
            if (pad == 0) pad = 1;
            lo[c] -= pad;
            hi[c] += pad;
        }
    }

    // Structured left sample: a grid of roughly a thousand points, a few
    // hundred random draws, and the ground itself when dimensions match.
    std::vector<Point> lefts;
    int res = 2;
    while (std::pow(static_cast<double>(res), d1) < 1000.0 && res < 1000) ++res;
    std::vector<int> tick(d1, 0);
    while (true) {
        Point p(d1);
        for (int c = 0; c < d1; ++c) {
            p[c] = lo[c] + (hi[c] - lo[c]) * Rational(tick[c], res - 1);
        }
        lefts.push_back(std::move(p));
        int i = d1 - 1;
        while (i >= 0 && tick[i] == res - 1) tick[i--] = 0;
        if (i < 0) break;
        ++tick[i];
    }
    Rng left_rng(mix_seed(seed, 0x6c656674));
    for (int k = 0; k < 256; ++k) {
        Point p(d1);
        for (int c = 0; c < d1; ++c) {
            p[c] = lo[c] + (hi[c] - lo[c]) * Rational(left_rng.int_in(0, 1 << 20), 1 << 20);
        }
        lefts.push_back(std::move(p));
    }
    if (d1 == ground.dimension) {
        lefts.insert(lefts.end(), ground.points.begin(), ground.points.end());
    }

    // Evaluate the incidence matrix once; trials only permute and project.
    std::vector<std::vector<bool>> incident(lefts.size(), std::vector<bool>(n));
    for (std::size_t x = 0; x < lefts.size(); ++x) {
        std::vector<Point> tuple{lefts[x], Point{}};
        for (int j = 0; j < n; ++j) {
            tuple[1] = ground.points[j];
            incident[x][j] = eval_relation(rel, tuple);
        }
    }

    std::vector<int> ladder_ms;
    for (int v = 4; v < m; v *= 2) ladder_ms.push_back(v);
    ladder_ms.push_back(m);

    ShatterEstimate estimate;
    for (int mi : ladder_ms) estimate.ladder.push_back({mi, 0});

    std::vector<int> order(n);
    for (int trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < n; ++i) order[i] = i;
        Rng rng(mix_seed(seed, 1000 + trial));
        rng.shuffle(order);
        // Nested prefixes keep the per-trial counts monotone in m: traces on
        // a subset are projections of traces on any superset.
        for (auto& [mi, traces] : estimate.ladder) {
            std::set<std::vector<bool>> distinct;
            std::vector<bool> trace(mi);
            for (const auto& row : incident) {
                for (int k = 0; k < mi; ++k) trace[k] = row[order[k]];
                distinct.insert(trace);
            }
            traces = std::max(traces, static_cast<long long>(distinct.size()));
        }
    }

    estimate.max_traces = estimate.ladder.back().traces;

    if (estimate.ladder.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double count = static_cast<double>(estimate.ladder.size());
        for (const auto& [mi, traces] : estimate.ladder) {
            const double x = std::log(static_cast<double>(mi));
            const double y = std::log(static_cast<double>(traces));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = count * sxx - sx * sx;
        if (denom > 0) estimate.fitted_exponent = (count * sxy - sx * sy) / denom;
    }
    return estimate;
}

}  // namespace pierce
