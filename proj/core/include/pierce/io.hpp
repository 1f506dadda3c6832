#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/relation.hpp"

namespace pierce {

// Exhaustive scans cover every (d+1)-subset up to this many tuples; larger
// sets fall back to a seeded random sample of kGenericityScanSamples tuples
// after an exact duplicate-point check.
inline constexpr long long kGenericityScanBudget = 2'000'000;
inline constexpr long long kGenericityScanSamples = 200'000;
inline constexpr std::uint64_t kGenericityScanSeed = 0x67656e;

// Outcome of a parse-time genericity scan. A positive flag from a sampled
// scan means no degeneracy was found, not a certificate, so callers that
// need a guarantee must check `exhaustive` as well.
struct GenericityScan {
    bool generic = false;
    bool exhaustive = true;
    long long tuples_checked = 0;
};

GenericityScan scan_genericity(const PointSet& set, std::uint64_t seed = kGenericityScanSeed);

// Reads a whole file into memory; raises ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

// Point-set file: {"dimension": d, "points": [["p/q", ...], ...]} with every
// coordinate a rational string. Rows whose width differs from the declared
// dimension raise DimensionMismatch; unknown keys, malformed rationals, and
// type errors raise ParseError. The genericity flag of the result is filled
// by scan_genericity with the default seed.
PointSet parse_pointset(const std::string& path);
PointSet parse_pointset_text(const std::string& json_text);

// Color-class file: JSON array of point-set objects sharing one dimension.
// Each class gets its own genericity scan.
std::vector<PointSet> parse_color_classes(const std::string& path);
std::vector<PointSet> parse_color_classes_text(const std::string& json_text);

// Edge file: {"edges": [[i, j, k], ...]} with 0-based strictly increasing
// indices below num_points. All rows must share one arity; indices outside
// the range raise IndexOutOfRange.
std::vector<std::vector<int>> parse_edges(const std::string& path, int num_points);
std::vector<std::vector<int>> parse_edges_text(const std::string& json_text, int num_points);

// Relation file. The general form spells out the sign conditions:
//   {"block_dims": [...],
//    "polys": [{"monomials": [{"coefficient": "p/q", "exponents": [...]}]}, ...],
//    "formula": <tree>}
// where formula nodes are {"kind": "constant", "value": b},
// {"kind": "atom", "atom": t} for "polys[t] <= 0", {"kind": "not", "child": f},
// and {"kind": "and"/"or", "children": [...]}. Two shorthands cover the
// built-in relations:
//   {"evaluator": "halfspace", "normal": ["p/q", ...]}
//   {"evaluator": "loose_family", "dimension": d}
SemiAlgRelation parse_relation(const std::string& path);
SemiAlgRelation parse_relation_text(const std::string& json_text);

}  // namespace pierce
