#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pierce/io.hpp"

using namespace pierce;
using pierce::fixtures::pti;
using pierce::fixtures::thrown_code;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

// n points on the parabola (t, t^2); every 3x3 orientation determinant is a
// Vandermonde product of distinct parameters, so the set is generic at any n.
PointSet parabola_set(int n) {
    PointSet set;
    set.dimension = 2;
    for (int t = 0; t < n; ++t) {
        set.points.push_back(pti({t, static_cast<long>(t) * t}));
    }
    return set;
}

}  // namespace

TEST_CASE("point-set files parse with exact coordinates") {
    const std::string text =
        R"({"dimension": 2, "points": [["1/2", "-3"], ["0", "7/5"], ["2", "0"]]})";

    const PointSet from_text = parse_pointset_text(text);
    CHECK(from_text.dimension == 2);
    REQUIRE(from_text.points.size() == 3);
    CHECK(from_text.points[0][0] == Rational(1, 2));
    CHECK(from_text.points[0][1] == Rational(-3));
    CHECK(from_text.points[1][1] == Rational(7, 5));
    CHECK(from_text.generic);

    const PointSet from_file = parse_pointset(write_temp("pierce_io_points.json", text));
    CHECK(from_file.points == from_text.points);

    // Unreduced fractions land in canonical form without losing exactness.
    const PointSet reduced =
        parse_pointset_text(R"({"dimension": 1, "points": [["2/4"], ["-6/4"]]})");
    CHECK(reduced.points[0][0] == Rational(1, 2));
    CHECK(reduced.points[1][0] == Rational(-3, 2));
}

TEST_CASE("point-set files reject malformed input") {
    const auto code = [](const std::string& text) {
        return thrown_code([&] { parse_pointset_text(text); });
    };
    CHECK(code(R"({"dimension": 2, "points": [["1/0", "0"]]})") == Errc::parse_error);
    CHECK(code(R"({"dimension": 2, "points": [["1", "2"], ["1", "2", "3"]]})") ==
          Errc::dimension_mismatch);
    CHECK(code(R"({"dimension": 0, "points": []})") == Errc::parse_error);
    CHECK(code(R"({"dimension": "2", "points": []})") == Errc::parse_error);
    CHECK(code(R"({"dimension": 2, "points": [[0.5, "1"]]})") == Errc::parse_error);
    CHECK(code(R"({"dimension": 2, "points": [], "extra": 1})") == Errc::parse_error);
    CHECK(code(R"({"dimension": 2})") == Errc::parse_error);
    CHECK(code(R"([1, 2, 3])") == Errc::parse_error);
    CHECK(code(R"({"dimension": 2, )") == Errc::parse_error);
    CHECK(thrown_code([] { parse_pointset("/nonexistent/pierce.json"); }) == Errc::parse_error);
}

TEST_CASE("genericity scans are exhaustive at desk scale") {
    const PointSet small = parabola_set(5);
    const GenericityScan scan = scan_genericity(small);
    CHECK(scan.generic);
    CHECK(scan.exhaustive);
    CHECK(scan.tuples_checked == 10);

    const PointSet collinear = parse_pointset_text(
        R"({"dimension": 2, "points": [["0", "0"], ["1", "1"], ["2", "2"]]})");
    CHECK_FALSE(collinear.generic);
    CHECK_FALSE(scan_genericity(collinear).generic);

    const PointSet duplicated = parse_pointset_text(
        R"({"dimension": 2, "points": [["3", "4"], ["3", "4"]]})");
    CHECK_FALSE(duplicated.generic);
}

TEST_CASE("genericity scans sample past the exhaustive budget") {
    PointSet big = parabola_set(300);
    const GenericityScan scan = scan_genericity(big);
    CHECK(scan.generic);
    CHECK_FALSE(scan.exhaustive);
    CHECK(scan.tuples_checked == kGenericityScanSamples);

    big.points.push_back(big.points.front());
    const GenericityScan with_duplicate = scan_genericity(big);
    CHECK_FALSE(with_duplicate.generic);
    CHECK_FALSE(with_duplicate.exhaustive);
}

TEST_CASE("edge files parse sorted index rows") {
    const std::string text = R"({"edges": [[0, 1, 2], [1, 2, 3], [0, 2, 3]]})";
    const auto from_text = parse_edges_text(text, 4);
    REQUIRE(from_text.size() == 3);
    CHECK(from_text[1] == std::vector<int>{1, 2, 3});
    CHECK(parse_edges(write_temp("pierce_io_edges.json", text), 4) == from_text);
    CHECK(parse_edges_text(R"({"edges": []})", 4).empty());

    const auto code = [](const std::string& body, int n) {
        return thrown_code([&] { parse_edges_text(body, n); });
    };
    CHECK(code(R"({"edges": [[1, 0, 2]]})", 4) == Errc::parse_error);
    CHECK(code(R"({"edges": [[0, 0, 1]]})", 4) == Errc::parse_error);
    CHECK(code(R"({"edges": [[0, 1, 9]]})", 4) == Errc::index_out_of_range);
    CHECK(code(R"({"edges": [[-1, 0, 1]]})", 4) == Errc::index_out_of_range);
    CHECK(code(R"({"edges": [[0, 1, 2], [0, 1]]})", 4) == Errc::parse_error);
    CHECK(code(R"({"edges": [[0, 1.5, 2]]})", 4) == Errc::parse_error);
    CHECK(code(R"({"edges": [[]]})", 4) == Errc::parse_error);
    CHECK(code(R"({"edges": [[0, 1, 2]], "extra": true})", 4) == Errc::parse_error);
    CHECK(code(R"({})", 4) == Errc::parse_error);
}

TEST_CASE("color-class files parse point-set lists") {
    const std::string text = R"([
        {"dimension": 2, "points": [["0", "0"], ["4", "0"], ["0", "4"]]},
        {"dimension": 2, "points": [["1", "1"], ["2", "1"], ["3", "1"]]}
    ])";
    const auto classes = parse_color_classes_text(text);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].generic);
    CHECK_FALSE(classes[1].generic);  // three points on one line
    CHECK(classes[1].points[2] == pti({3, 1}));
    CHECK(parse_color_classes(write_temp("pierce_io_colors.json", text)).size() == 2);

    CHECK(thrown_code([] {
              parse_color_classes_text(
                  R"([{"dimension": 2, "points": []}, {"dimension": 3, "points": []}])");
          }) == Errc::dimension_mismatch);
    CHECK(thrown_code([] { parse_color_classes_text(R"({"dimension": 2})"); }) ==
          Errc::parse_error);
}

TEST_CASE("relation files cover the built-in shorthands") {
    const SemiAlgRelation halfspace =
        parse_relation_text(R"({"evaluator": "halfspace", "normal": ["1", "0"]})");
    CHECK(halfspace.block_dims == std::vector<int>{2, 2});
    CHECK(eval_relation(halfspace, {pti({1, 5}), pti({0, 5})}));
    CHECK_FALSE(eval_relation(halfspace, {pti({0, 5}), pti({1, 5})}));

    const std::string loose_text = R"({"evaluator": "loose_family", "dimension": 2})";
    const SemiAlgRelation loose = parse_relation_text(loose_text);
    CHECK(loose.evaluator == RelationEvaluator::loose_family);
    CHECK(loose.loose_dimension == 2);
    CHECK(loose.block_dims == std::vector<int>(3, 4));
    CHECK(parse_relation(write_temp("pierce_io_relation.json", loose_text)).degree ==
          loose.degree);
}

TEST_CASE("relation files spell out sign conditions") {
    // Single atom x0 - x1 <= 0 over two one-dimensional blocks.
    const std::string text = R"({
        "block_dims": [1, 1],
        "polys": [{"monomials": [
            {"coefficient": "1", "exponents": [1, 0]},
            {"coefficient": "-1", "exponents": [0, 1]}
        ]}],
        "formula": {"kind": "not", "child": {"kind": "and", "children": [
            {"kind": "constant", "value": true},
            {"kind": "not", "child": {"kind": "atom", "atom": 0}}
        ]}}
    })";
    const SemiAlgRelation rel = parse_relation_text(text);
    CHECK(rel.degree == 1);
    CHECK(rel.evaluator == RelationEvaluator::sign_formula);
    CHECK(eval_relation(rel, {Point{Rational(0)}, Point{Rational(1)}}));
    CHECK_FALSE(eval_relation(rel, {Point{Rational(2)}, Point{Rational(1)}}));

    const auto code = [](const std::string& body) {
        return thrown_code([&] { parse_relation_text(body); });
    };
    CHECK(code(R"({"evaluator": "mystery"})") == Errc::parse_error);
    CHECK(code(R"({"evaluator": "halfspace", "normal": []})") == Errc::parse_error);
    CHECK(code(R"({"block_dims": [1], "polys": [],
                   "formula": {"kind": "atom", "atom": 0}})") == Errc::parse_error);
    CHECK(code(R"({"block_dims": [1], "polys": [{"monomials": [
                     {"coefficient": "1", "exponents": [1, 1]}]}],
                   "formula": {"kind": "constant", "value": true}})") == Errc::parse_error);
    CHECK(code(R"({"block_dims": [1], "polys": [{"monomials": [
                     {"coefficient": "1", "exponents": [-1]}]}],
                   "formula": {"kind": "constant", "value": true}})") == Errc::parse_error);
    CHECK(code(R"({"block_dims": [0], "polys": [],
                   "formula": {"kind": "constant", "value": true}})") == Errc::parse_error);
    CHECK(code(R"({"block_dims": [1], "polys": [], "surprise": 3,
                   "formula": {"kind": "constant", "value": true}})") == Errc::parse_error);
}
