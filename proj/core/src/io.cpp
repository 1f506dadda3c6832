#include "pierce/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "pierce/errors.hpp"
#include "pierce/random.hpp"

namespace pierce {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::parse_error, std::string(what) + ": " + e.what());
    }
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (item.key() == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            raise(Errc::parse_error, std::string(what) + ": unknown key '" + item.key() + "'");
        }
    }
}

const json& require_key(const json& object, const char* key, const char* what) {
    if (!object.is_object()) {
        raise(Errc::parse_error, std::string(what) + " must be a JSON object");
    }
    const auto it = object.find(key);
    if (it == object.end()) {
        raise(Errc::parse_error, std::string(what) + ": missing key '" + key + "'");
    }
    return *it;
}

int require_int(const json& value, const char* what) {
    if (!value.is_number_integer()) {
        raise(Errc::parse_error, std::string(what) + " must be an integer");
    }
    const long long wide = value.get<long long>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
        raise(Errc::parse_error, std::string(what) + " is out of range");
    }
    return static_cast<int>(wide);
}

Rational require_rational(const json& value, const char* what) {
    if (!value.is_string()) {
        raise(Errc::parse_error, std::string(what) + " must be a rational string");
    }
    return parse_rational(value.get<std::string>());
}

PointSet pointset_from_json(const json& doc) {
    if (!doc.is_object()) {
        raise(Errc::parse_error, "point set must be a JSON object");
    }
    reject_unknown_keys(doc, {"dimension", "points"}, "point set");
    PointSet set;
    set.dimension = require_int(require_key(doc, "dimension", "point set"), "'dimension'");
    if (set.dimension < 1) {
        raise(Errc::parse_error, "'dimension' must be at least 1");
    }
    const json& rows = require_key(doc, "points", "point set");
    if (!rows.is_array()) {
        raise(Errc::parse_error, "'points' must be an array");
    }
    for (const json& row : rows) {
        if (!row.is_array()) {
            raise(Errc::parse_error, "each point must be an array of rational strings");
        }
        if (static_cast<int>(row.size()) != set.dimension) {
            raise(Errc::dimension_mismatch,
                  "point row has " + std::to_string(row.size()) + " coordinates, expected " +
                      std::to_string(set.dimension));
        }
        Point point;
        point.reserve(row.size());
        for (const json& coord : row) {
            point.push_back(require_rational(coord, "coordinate"));
        }
        set.points.push_back(std::move(point));
    }
    return set;
}

// C(n, k), clamped to cap + 1 as soon as it exceeds the cap. The running
// product stays exact because every prefix is itself a binomial.
long long capped_binomial(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
        if (result > cap) return cap + 1;
    }
    return result;
}

}  // namespace

GenericityScan scan_genericity(const PointSet& set, std::uint64_t seed) {
    for (const Point& p : set.points) {
        if (static_cast<int>(p.size()) != set.dimension) {
            raise(Errc::dimension_mismatch, "point dimension");
        }
    }
    const int n = static_cast<int>(set.points.size());
    const int d = set.dimension;
    GenericityScan scan;
    const long long tuples = capped_binomial(n, d + 1, kGenericityScanBudget);
    if (tuples <= kGenericityScanBudget) {
        scan.exhaustive = true;
        scan.tuples_checked = tuples;
        scan.generic = verify_generic(set.points, d);
        return scan;
    }
    scan.exhaustive = false;

    // Random tuples are unlikely to hit an exact duplicate, so coincident
    // points get an exact sweep of their own first.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return set.points[a] < set.points[b]; });
    for (int i = 0; i + 1 < n; ++i) {
        if (set.points[order[i]] == set.points[order[i + 1]]) {
            scan.generic = false;
            return scan;
        }
    }

    Rng rng(seed);
    std::vector<Point> tuple;
    for (long long t = 0; t < kGenericityScanSamples; ++t) {
        const std::vector<int> pick = rng.sample_indices(n, d + 1);
        tuple.clear();
        for (int index : pick) tuple.push_back(set.points[index]);
        scan.tuples_checked = t + 1;
        if (orientation(tuple) == 0) {
            scan.generic = false;
            return scan;
        }
    }
    scan.generic = true;
    return scan;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, "cannot open file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

PointSet parse_pointset_text(const std::string& json_text) {
    PointSet set = pointset_from_json(parse_document(json_text, "point-set file"));
    set.generic = scan_genericity(set).generic;
    return set;
}

PointSet parse_pointset(const std::string& path) {
    return parse_pointset_text(read_text_file(path));
}

std::vector<PointSet> parse_color_classes_text(const std::string& json_text) {
    const json doc = parse_document(json_text, "color-class file");
    if (!doc.is_array()) {
        raise(Errc::parse_error, "color-class file must hold a JSON array of point sets");
    }
    std::vector<PointSet> classes;
    for (const json& entry : doc) {
        PointSet set = pointset_from_json(entry);
        if (!classes.empty() && set.dimension != classes.front().dimension) {
            raise(Errc::dimension_mismatch,
                  "color class " + std::to_string(classes.size()) + " has dimension " +
                      std::to_string(set.dimension) + ", expected " +
                      std::to_string(classes.front().dimension));
        }
        set.generic = scan_genericity(set).generic;
        classes.push_back(std::move(set));
    }
    return classes;
}

std::vector<PointSet> parse_color_classes(const std::string& path) {
    return parse_color_classes_text(read_text_file(path));
}

std::vector<std::vector<int>> parse_edges_text(const std::string& json_text, int num_points) {
    const json doc = parse_document(json_text, "edge file");
    if (!doc.is_object()) {
        raise(Errc::parse_error, "edge file must hold a JSON object");
    }
    reject_unknown_keys(doc, {"edges"}, "edge file");
    const json& rows = require_key(doc, "edges", "edge file");
    if (!rows.is_array()) {
        raise(Errc::parse_error, "'edges' must be an array");
    }
    std::vector<std::vector<int>> edges;
    for (const json& row : rows) {
        if (!row.is_array() || row.empty()) {
            raise(Errc::parse_error, "each edge must be a nonempty array of indices");
        }
        if (!edges.empty() && row.size() != edges.front().size()) {
            raise(Errc::parse_error,
                  "edge rows mix arities " + std::to_string(edges.front().size()) + " and " +
                      std::to_string(row.size()));
        }
        std::vector<int> edge;
        edge.reserve(row.size());
        for (const json& entry : row) {
            const int index = require_int(entry, "edge index");
            if (index < 0 || index >= num_points) {
                raise(Errc::index_out_of_range,
                      "edge index " + std::to_string(index) + " outside [0, " +
                          std::to_string(num_points) + ")");
            }
            if (!edge.empty() && index <= edge.back()) {
                raise(Errc::parse_error, "edge indices must be strictly increasing");
            }
            edge.push_back(index);
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

std::vector<std::vector<int>> parse_edges(const std::string& path, int num_points) {
    return parse_edges_text(read_text_file(path), num_points);
}

namespace {

Formula formula_from_json(const json& node, int num_atoms) {
    const json& kind = require_key(node, "kind", "formula node");
    if (!kind.is_string()) {
        raise(Errc::parse_error, "formula 'kind' must be a string");
    }
    const std::string name = kind.get<std::string>();
    if (name == "constant") {
        reject_unknown_keys(node, {"kind", "value"}, "formula node");
        const json& value = require_key(node, "value", "formula node");
        if (!value.is_boolean()) {
            raise(Errc::parse_error, "formula 'value' must be a boolean");
        }
        return Formula::constant_of(value.get<bool>());
    }
    if (name == "atom") {
        reject_unknown_keys(node, {"kind", "atom"}, "formula node");
        const int atom = require_int(require_key(node, "atom", "formula node"), "'atom'");
        if (atom < 0 || atom >= num_atoms) {
            raise(Errc::parse_error,
                  "atom index " + std::to_string(atom) + " outside [0, " +
                      std::to_string(num_atoms) + ")");
        }
        return Formula::atom_leq(atom);
    }
    if (name == "not") {
        reject_unknown_keys(node, {"kind", "child"}, "formula node");
        return Formula::negation_of(
            formula_from_json(require_key(node, "child", "formula node"), num_atoms));
    }
    if (name == "and" || name == "or") {
        reject_unknown_keys(node, {"kind", "children"}, "formula node");
        const json& children = require_key(node, "children", "formula node");
        if (!children.is_array()) {
            raise(Errc::parse_error, "formula 'children' must be an array");
        }
        std::vector<Formula> parts;
        for (const json& child : children) {
            parts.push_back(formula_from_json(child, num_atoms));
        }
        return name == "and" ? Formula::all_of(std::move(parts))
                             : Formula::any_of(std::move(parts));
    }
    raise(Errc::parse_error, "unknown formula kind '" + name + "'");
}

SemiAlgRelation relation_from_json(const json& doc) {
    if (!doc.is_object()) {
        raise(Errc::parse_error, "relation file must hold a JSON object");
    }
    std::string evaluator = "sign_formula";
    if (const auto it = doc.find("evaluator"); it != doc.end()) {
        if (!it->is_string()) {
            raise(Errc::parse_error, "relation 'evaluator' must be a string");
        }
        evaluator = it->get<std::string>();
    }
    if (evaluator == "halfspace") {
        reject_unknown_keys(doc, {"evaluator", "normal"}, "relation");
        const json& entries = require_key(doc, "normal", "relation");
        if (!entries.is_array() || entries.empty()) {
            raise(Errc::parse_error, "'normal' must be a nonempty array of rational strings");
        }
        std::vector<Rational> normal;
        for (const json& entry : entries) {
            normal.push_back(require_rational(entry, "normal entry"));
        }
        return halfspace_relation(normal);
    }
    if (evaluator == "loose_family") {
        reject_unknown_keys(doc, {"evaluator", "dimension"}, "relation");
        return loose_relation(require_int(require_key(doc, "dimension", "relation"), "'dimension'"));
    }
    if (evaluator != "sign_formula") {
        raise(Errc::parse_error, "unknown evaluator '" + evaluator + "'");
    }

    reject_unknown_keys(doc, {"evaluator", "block_dims", "polys", "formula"}, "relation");
    SemiAlgRelation rel;
    const json& dims = require_key(doc, "block_dims", "relation");
    if (!dims.is_array() || dims.empty()) {
        raise(Errc::parse_error, "'block_dims' must be a nonempty array");
    }
    for (const json& dim : dims) {
        const int width = require_int(dim, "block dimension");
        if (width < 1) raise(Errc::parse_error, "block dimensions must be positive");
        rel.block_dims.push_back(width);
    }
    const int total = rel.total_dims();

    const json& polys = require_key(doc, "polys", "relation");
    if (!polys.is_array()) {
        raise(Errc::parse_error, "'polys' must be an array");
    }
    for (const json& entry : polys) {
        if (!entry.is_object()) {
            raise(Errc::parse_error, "each polynomial must be a JSON object");
        }
        reject_unknown_keys(entry, {"monomials"}, "polynomial");
        const json& monomials = require_key(entry, "monomials", "polynomial");
        if (!monomials.is_array()) {
            raise(Errc::parse_error, "'monomials' must be an array");
        }
        Polynomial poly;
        for (const json& term : monomials) {
            if (!term.is_object()) {
                raise(Errc::parse_error, "each monomial must be a JSON object");
            }
            reject_unknown_keys(term, {"coefficient", "exponents"}, "monomial");
            Monomial monomial;
            monomial.coefficient =
                require_rational(require_key(term, "coefficient", "monomial"), "'coefficient'");
            const json& exponents = require_key(term, "exponents", "monomial");
            if (!exponents.is_array() || static_cast<int>(exponents.size()) != total) {
                raise(Errc::parse_error,
                      "'exponents' must list one entry per coordinate (" + std::to_string(total) +
                          ")");
            }
            for (const json& exponent : exponents) {
                const int power = require_int(exponent, "exponent");
                if (power < 0) raise(Errc::parse_error, "exponents must be nonnegative");
                monomial.exponents.push_back(power);
            }
            poly.monomials.push_back(std::move(monomial));
        }
        rel.polys.push_back(std::move(poly));
    }

    rel.formula = formula_from_json(require_key(doc, "formula", "relation"),
                                    static_cast<int>(rel.polys.size()));
    for (const Polynomial& poly : rel.polys) {
        rel.degree = std::max(rel.degree, poly.degree());
    }
    return rel;
}

}  // namespace

SemiAlgRelation parse_relation_text(const std::string& json_text) {
    return relation_from_json(parse_document(json_text, "relation file"));
}

SemiAlgRelation parse_relation(const std::string& path) {
    return parse_relation_text(read_text_file(path));
}

}  // namespace pierce
