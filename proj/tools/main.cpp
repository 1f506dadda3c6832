#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pierce/census.hpp"
#include "pierce/constants.hpp"
#include "pierce/depth.hpp"
#include "pierce/errors.hpp"
#include "pierce/extremal.hpp"
#include "pierce/family.hpp"
#include "pierce/io.hpp"
#include "pierce/partition.hpp"
#include "pierce/pinning.hpp"
#include "pierce/selection.hpp"
#include "pierce/turan.hpp"
#include "pierce/version.hpp"

namespace {

using json = nlohmann::json;
using namespace pierce;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string edges_path;
    std::string colors_path;
    std::optional<int> dimension;
    std::optional<int> r;
    std::optional<int> k;
    std::string eps_text;
    std::optional<std::uint64_t> seed;
    std::optional<int> n0;
    int threads = 1;
    std::string out_dir = ".";
    bool emit_csv = false;
    std::string constants_path;
};

// ---- JSON views of the core types; rationals always travel as strings ----

json point_json(const Point& p) {
    json row = json::array();
    for (const Rational& coord : p) row.push_back(format_rational(coord));
    return row;
}

json points_json(const std::vector<Point>& points) {
    json rows = json::array();
    for (const Point& p : points) rows.push_back(point_json(p));
    return rows;
}

json pointset_json(const PointSet& set) {
    return json{{"dimension", set.dimension},
                {"points", points_json(set.points)},
                {"generic", set.generic}};
}

json pointsets_json(const std::vector<PointSet>& sets) {
    json rows = json::array();
    for (const PointSet& set : sets) rows.push_back(pointset_json(set));
    return rows;
}

json simplex_json(const Simplex& simplex) { return points_json(simplex.vertices); }

json hyperplane_json(const OrientedHyperplane& h) {
    return json{{"normal", point_json(h.normal)}, {"offset", format_rational(h.offset)}};
}

json depth_json(const DepthResult& result) {
    json out{{"point", point_json(result.point)}, {"pierced_count", result.pierced_count}};
    out["pierced_indices"] = result.pierced_indices ? json(*result.pierced_indices) : json(nullptr);
    return out;
}

json census_json(const TupleCensus& census) {
    json out{{"r_nonempty", census.r_nonempty},
             {"crossed", census.crossed},
             {"loose", census.loose},
             {"tight", census.tight},
             {"has_edges", census.has_edges}};
    if (census.has_edges) {
        out["crowded"] = census.crowded;
        out["crossed_ambient"] = census.crossed_ambient;
        out["loose_ambient"] = census.loose_ambient;
        out["tight_ambient"] = census.tight_ambient;
        out["heaviest_tight_cells"] =
            census.heaviest_tight_cells ? json(*census.heaviest_tight_cells) : json(nullptr);
        out["heaviest_tight_load"] = census.heaviest_tight_load;
    }
    return out;
}

json constants_json(const ToolkitConstants& c) {
    return json{{"same_type_coefficient", format_rational(c.same_type_coefficient)},
                {"selection_r_coefficient", format_rational(c.selection_r_coefficient)},
                {"selection_base_threshold", c.selection_base_threshold},
                {"packing_delta_fraction", format_rational(c.packing_delta_fraction)},
                {"dyadic_divisor", c.dyadic_divisor},
                {"mnet_large_edge_fraction", format_rational(c.mnet_large_edge_fraction)},
                {"mnet_keep_fraction", format_rational(c.mnet_keep_fraction)},
                {"mnet_singleton_threshold", format_rational(c.mnet_singleton_threshold)},
                {"pinning_eta_shift", c.pinning_eta_shift}};
}

json formula_json(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::constant:
            return json{{"kind", "constant"}, {"value", f.value}};
        case Formula::Kind::atom:
            return json{{"kind", "atom"}, {"atom", f.atom}};
        case Formula::Kind::negation:
            return json{{"kind", "not"}, {"child", formula_json(f.children.front())}};
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction: {
            json children = json::array();
            for (const Formula& child : f.children) children.push_back(formula_json(child));
            return json{{"kind", f.kind == Formula::Kind::conjunction ? "and" : "or"},
                        {"children", std::move(children)}};
        }
    }
    return json(nullptr);
}

json relation_json(const SemiAlgRelation& rel) {
    json out{{"block_dims", rel.block_dims}, {"degree", rel.degree}};
    if (rel.evaluator == RelationEvaluator::loose_family) {
        out["evaluator"] = "loose_family";
        out["loose_dimension"] = rel.loose_dimension;
    } else {
        out["evaluator"] = "sign_formula";
    }
    json polys = json::array();
    for (const Polynomial& poly : rel.polys) {
        json monomials = json::array();
        for (const Monomial& m : poly.monomials) {
            monomials.push_back(json{{"coefficient", format_rational(m.coefficient)},
                                     {"exponents", m.exponents}});
        }
        polys.push_back(json{{"monomials", std::move(monomials)}});
    }
    out["polys"] = std::move(polys);
    out["formula"] = formula_json(rel.formula);
    return out;
}

std::string join_indices(const std::vector<int>& indices) {
    std::string text;
    for (int index : indices) {
        if (!text.empty()) text += ';';
        text += std::to_string(index);
    }
    return text;
}

const char* delta_kind_name(DeltaKind kind) {
    switch (kind) {
        case DeltaKind::bounded_simplex: return "bounded_simplex";
        case DeltaKind::unbounded: return "unbounded";
        case DeltaKind::empty: return "empty";
    }
    return "empty";
}

// ---- shared input loading ----

PointSet load_points(const RunConfig& cfg, json& inputs) {
    PointSet points = parse_pointset(cfg.input_path);
    inputs["points"] = pointset_json(points);
    return points;
}

EdgeList load_edges(const RunConfig& cfg, int num_points, json& inputs) {
    EdgeList edges = parse_edges(cfg.edges_path, num_points);
    inputs["edges"] = edges;
    return edges;
}

std::vector<PointSet> load_colors(const RunConfig& cfg, json& inputs, const char* key = "colors") {
    std::vector<PointSet> classes = parse_color_classes(cfg.colors_path);
    inputs[key] = pointsets_json(classes);
    return classes;
}

ToolkitConstants load_effective_constants(const RunConfig& cfg, json& inputs) {
    ToolkitConstants constants =
        cfg.constants_path.empty() ? default_constants() : load_constants_file(cfg.constants_path);
    inputs["constants"] = constants_json(constants);
    return constants;
}

// Family members arrive as a list of point-set objects, one per member.
std::pair<int, std::vector<Simplex>> load_members(const RunConfig& cfg, json& inputs) {
    const std::vector<PointSet> sets = load_colors(cfg, inputs, "members");
    if (sets.empty()) raise(Errc::invalid_argument, "need at least one member point set");
    const int d = sets.front().dimension;
    if (cfg.dimension && *cfg.dimension != d) {
        raise(Errc::dimension_mismatch, "--dimension disagrees with the member files");
    }
    std::vector<Simplex> members;
    members.reserve(sets.size());
    for (const PointSet& set : sets) members.push_back(make_simplex(set.points, d));
    return {d, std::move(members)};
}

// ---- command bodies; each returns the results object and fills csv ----

json run_classify(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    auto [d, members] = load_members(cfg, inputs);
    inputs["dimension"] = d;
    const Family family = make_family(d, std::move(members));
    const FamilyClass kind = classify_family(family);
    const bool separated = kind != FamilyClass::crossed;

    json results{{"family_class", family_class_name(kind)}, {"separated", separated}};
    results["delta"] = json(nullptr);
    if (separated) {
        const DeltaCell delta = delta_cell(family);
        json cell{{"kind", delta_kind_name(delta.kind)}};
        json tangents = json::array();
        for (const OrientedHyperplane& h : delta.tangents) tangents.push_back(hyperplane_json(h));
        cell["tangents"] = std::move(tangents);
        cell["cell"] = delta.cell ? simplex_json(*delta.cell) : json(nullptr);
        results["delta"] = std::move(cell);
    }

    csv.push_back("family_class,separated");
    csv.push_back(std::string(family_class_name(kind)) + "," + (separated ? "1" : "0"));
    return results;
}

json run_partition(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    inputs["r"] = *cfg.r;
    const SimplicialPartition partition = build_partition(points, *cfg.r, *cfg.seed);

    json parts = json::array();
    csv.push_back("part,size");
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
        const PartitionPart& part = partition.parts[i];
        parts.push_back(json{{"indices", part.indices}, {"cell", simplex_json(part.cell)}});
        csv.push_back(std::to_string(i) + "," + std::to_string(part.indices.size()));
    }
    return json{{"r", partition.r},
                {"dimension", partition.dimension},
                {"nonempty_parts", partition.nonempty_count()},
                {"cells_verified_generic", partition.cells_verified_generic},
                {"parts", std::move(parts)}};
}

json run_census(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    inputs["r"] = *cfg.r;
    std::optional<EdgeList> edges;
    if (!cfg.edges_path.empty()) {
        edges = load_edges(cfg, static_cast<int>(points.points.size()), inputs);
    } else {
        inputs["edges"] = json(nullptr);
    }
    const SimplicialPartition partition = build_partition(points, *cfg.r, *cfg.seed);
    const CensusResult census = tuple_census(partition, edges);

    json results{{"summary", census_json(census.summary)}};
    if (edges) {
        json kinds = json::array();
        for (const EdgeKind kind : census.edge_kinds) {
            switch (kind) {
                case EdgeKind::crowded: kinds.push_back("crowded"); break;
                case EdgeKind::crossed_ambient: kinds.push_back("crossed_ambient"); break;
                case EdgeKind::loose_ambient: kinds.push_back("loose_ambient"); break;
                case EdgeKind::tight_ambient: kinds.push_back("tight_ambient"); break;
            }
        }
        results["edge_kinds"] = std::move(kinds);
        results["edge_ambient_cells"] = census.edge_ambient_cells;
    }

    csv.push_back("class,count");
    csv.push_back("crossed," + std::to_string(census.summary.crossed));
    csv.push_back("loose," + std::to_string(census.summary.loose));
    csv.push_back("tight," + std::to_string(census.summary.tight));
    return results;
}

json run_colored_census(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const std::vector<PointSet> colors = load_colors(cfg, inputs);
    inputs["r"] = *cfg.r;
    const ColoredCensus census = colored_tuple_census(colors, *cfg.r, *cfg.seed);

    json partitions = json::array();
    for (const SimplicialPartition& partition : census.partitions) {
        partitions.push_back(json{{"r", partition.r}, {"nonempty_parts", partition.nonempty_count()}});
    }
    csv.push_back("class,count");
    csv.push_back("crossed," + std::to_string(census.crossed));
    csv.push_back("loose," + std::to_string(census.loose));
    csv.push_back("tight," + std::to_string(census.tight));
    return json{{"crossed", census.crossed},
                {"loose", census.loose},
                {"tight", census.tight},
                {"tight_tuples", census.tight_tuples},
                {"partitions", std::move(partitions)}};
}

json run_select(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    const EdgeList edges = load_edges(cfg, static_cast<int>(points.points.size()), inputs);
    SelectionOptions options;
    options.r = cfg.r;
    options.base_threshold = cfg.n0;
    options.threads = cfg.threads;
    options.constants = load_effective_constants(cfg, inputs);
    const auto [depth, trace] = select_point(points, edges, *cfg.seed, options);

    json levels = json::array();
    csv.push_back("level,n,edge_count,r,action,crossed,loose,tight");
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
        const SelectionLevel& level = trace.levels[i];
        levels.push_back(json{{"n", level.n},
                              {"edge_count", level.edge_count},
                              {"r", level.r},
                              {"action", selection_case_name(level.action)},
                              {"chosen_cells", level.chosen_cells},
                              {"census", census_json(level.census)}});
        csv.push_back(std::to_string(i) + "," + std::to_string(level.n) + "," +
                      std::to_string(level.edge_count) + "," + std::to_string(level.r) + "," +
                      selection_case_name(level.action) + "," +
                      std::to_string(level.census.crossed) + "," +
                      std::to_string(level.census.loose) + "," +
                      std::to_string(level.census.tight));
    }
    return json{{"depth", depth_json(depth)}, {"trace", json{{"levels", std::move(levels)}}}};
}

json run_oracle_depth(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    const EdgeList edges = load_edges(cfg, static_cast<int>(points.points.size()), inputs);
    const DepthResult depth = brute_force_deepest(points, edges, cfg.threads);
    csv.push_back("pierced_edge");
    if (depth.pierced_indices) {
        for (int index : *depth.pierced_indices) csv.push_back(std::to_string(index));
    }
    return json{{"depth", depth_json(depth)}};
}

json run_colorful_depth(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const std::vector<PointSet> colors = load_colors(cfg, inputs);
    const DepthResult depth = colorful_deepest(colors, cfg.threads);
    csv.push_back("pierced_tuple_rank");
    if (depth.pierced_indices) {
        for (int rank : *depth.pierced_indices) csv.push_back(std::to_string(rank));
    }
    return json{{"depth", depth_json(depth)}};
}

json run_pinning(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const std::vector<PointSet> sets = load_colors(cfg, inputs, "simplices");
    if (sets.empty()) raise(Errc::invalid_argument, "need at least one input simplex");
    const int d = sets.front().dimension;
    if (cfg.dimension && *cfg.dimension != d) {
        raise(Errc::dimension_mismatch, "--dimension disagrees with the simplex files");
    }
    std::vector<Simplex> simplices;
    simplices.reserve(sets.size());
    for (const PointSet& set : sets) simplices.push_back(make_simplex(set.points, d));
    const ToolkitConstants constants = load_effective_constants(cfg, inputs);
    const PinningOutcome outcome = pinning_pipeline(simplices, *cfg.seed, constants, cfg.threads);

    json families = json::array();
    csv.push_back("family,member_indices");
    for (std::size_t i = 0; i < outcome.families.size(); ++i) {
        const PinnedFamily& family = outcome.families[i];
        families.push_back(json{{"member_indices", family.member_indices},
                                {"witness", points_json(family.witness.member_points)}});
        csv.push_back(std::to_string(i) + "," + join_indices(family.member_indices));
    }
    return json{{"point", point_json(outcome.point)},
                {"families", std::move(families)},
                {"colors", outcome.colors},
                {"eta", format_rational(outcome.eta)},
                {"loose_tuples", outcome.loose_tuples},
                {"block_product", outcome.block_product}};
}

json run_turan(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const SemiAlgRelation relation = parse_relation(cfg.input_path);
    inputs["relation"] = relation_json(relation);
    const std::vector<PointSet> classes = load_colors(cfg, inputs, "classes");
    const Rational eps = parse_rational(cfg.eps_text);
    if (eps <= 0) raise(Errc::invalid_argument, "--eps must be positive");
    inputs["eps"] = format_rational(eps);
    const ToolkitConstants constants = load_effective_constants(cfg, inputs);
    const TuranBlock block = kpartite_turan(classes, relation, eps, *cfg.seed, constants);

    csv.push_back("class,subset_size,indices");
    for (std::size_t i = 0; i < block.subsets.size(); ++i) {
        csv.push_back(std::to_string(i) + "," + std::to_string(block.subsets[i].size()) + "," +
                      join_indices(block.subsets[i]));
    }
    return json{{"subsets", block.subsets},
                {"complete", block.complete},
                {"size_product", block.size_product},
                {"region_note", block.region_note ? json(*block.region_note) : json(nullptr)},
                {"mnet_cover_verified", block.mnet_cover_verified}};
}

json run_same_type(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    inputs["k"] = *cfg.k;
    inputs["r_override"] = cfg.r ? json(*cfg.r) : json(nullptr);
    const ToolkitConstants constants = load_effective_constants(cfg, inputs);
    const SameTypeResult result =
        same_type_extract(points, *cfg.k, cfg.r, *cfg.seed, constants);

    csv.push_back("subset,indices");
    for (std::size_t i = 0; i < result.subsets.size(); ++i) {
        csv.push_back(std::to_string(i) + "," + join_indices(result.subsets[i]));
    }
    return json{{"subsets", result.subsets},
                {"order_type", result.order_type},
                {"chosen_parts", result.chosen_parts},
                {"r_used", result.r_used}};
}

json run_halving(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    const HalvingReport report = halving_count(points);

    json sides = json::array();
    csv.push_back("subset,positive,negative");
    for (std::size_t i = 0; i < report.subsets.size(); ++i) {
        const auto [positive, negative] = report.side_counts[i];
        sides.push_back(json{positive, negative});
        csv.push_back(join_indices(report.subsets[i]) + "," + std::to_string(positive) + "," +
                      std::to_string(negative));
    }
    return json{{"n", report.n},
                {"dimension", report.d},
                {"count", report.count},
                {"subsets", report.subsets},
                {"side_counts", std::move(sides)}};
}

json run_ksets(const RunConfig& cfg, json& inputs, std::vector<std::string>& csv) {
    const PointSet points = load_points(cfg, inputs);
    inputs["k"] = *cfg.k;
    const KSetReport report = kset_count(points, *cfg.k, cfg.threads);

    csv.push_back("subset");
    for (const std::vector<int>& subset : report.subsets) csv.push_back(join_indices(subset));
    return json{{"n", report.n},
                {"dimension", report.d},
                {"k", report.k},
                {"count", report.count},
                {"subsets", report.subsets}};
}

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

int run_command(const RunConfig& cfg) {
    json inputs = json::object();
    std::vector<std::string> csv;
    json results;
    if (cfg.command == "classify") results = run_classify(cfg, inputs, csv);
    else if (cfg.command == "partition") results = run_partition(cfg, inputs, csv);
    else if (cfg.command == "census") results = run_census(cfg, inputs, csv);
    else if (cfg.command == "colored-census") results = run_colored_census(cfg, inputs, csv);
    else if (cfg.command == "select") results = run_select(cfg, inputs, csv);
    else if (cfg.command == "oracle-depth") results = run_oracle_depth(cfg, inputs, csv);
    else if (cfg.command == "colorful-depth") results = run_colorful_depth(cfg, inputs, csv);
    else if (cfg.command == "pinning") results = run_pinning(cfg, inputs, csv);
    else if (cfg.command == "turan") results = run_turan(cfg, inputs, csv);
    else if (cfg.command == "same-type") results = run_same_type(cfg, inputs, csv);
    else if (cfg.command == "halving") results = run_halving(cfg, inputs, csv);
    else if (cfg.command == "ksets") results = run_ksets(cfg, inputs, csv);
    else raise(Errc::invalid_argument, "unknown command " + cfg.command);

    const json report{{"command", cfg.command},
                      {"toolkit_version", toolkit_version},
                      {"report_format_version", report_format_version},
                      {"threads", cfg.threads},
                      {"seed", cfg.seed ? json(*cfg.seed) : json(nullptr)},
                      {"inputs", std::move(inputs)},
                      {"results", std::move(results)},
                      {"timestamp", iso_timestamp()}};

    const std::filesystem::path out_dir(cfg.out_dir);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path report_path = out_dir / (cfg.command + "_report.json");
    {
        std::ofstream out(report_path);
        if (!out) raise(Errc::parse_error, "cannot write " + report_path.string());
        out << report.dump(2) << '\n';
    }
    std::cout << "wrote " << report_path.string() << '\n';

    if (cfg.emit_csv) {
        const std::filesystem::path csv_path = out_dir / (cfg.command + "_plot.csv");
        std::ofstream out(csv_path);
        if (!out) raise(Errc::parse_error, "cannot write " + csv_path.string());
        for (const std::string& line : csv) out << line << '\n';
        std::cout << "wrote " << csv_path.string() << '\n';
    }
    return 0;
}

constexpr const char* kCsvFooter =
    "CSV schemas (--emit-csv): classify family_class,separated; partition part,size; "
    "census and colored-census class,count; select level,n,edge_count,r,action,crossed,loose,tight; "
    "oracle-depth pierced_edge; colorful-depth pierced_tuple_rank; pinning family,member_indices; "
    "turan class,subset_size,indices; same-type subset,indices; halving subset,positive,negative; "
    "ksets subset. Index lists inside one CSV cell are ';'-separated.";

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact toolkit for piercing, depth, and partition experiments over rational "
                 "point sets. Reports are JSON with rationals as strings; a fixed seed "
                 "reproduces every result payload byte for byte."};
    app.require_subcommand(1);
    app.footer(kCsvFooter);

    const auto add_command = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->callback([&cfg, name] { cfg.command = name; });
        cmd->add_option("--threads", cfg.threads, "worker thread cap")->check(CLI::PositiveNumber);
        cmd->add_option("--out", cfg.out_dir, "output directory (default: current)");
        cmd->add_flag("--emit-csv", cfg.emit_csv, "also write <command>_plot.csv");
        return cmd;
    };
    const auto points_option = [&](CLI::App* cmd) {
        return cmd->add_option("--input", cfg.input_path, "point-set JSON file")->required();
    };
    const auto seed_option = [&](CLI::App* cmd) {
        return cmd->add_option("--seed", cfg.seed, "RNG seed (required: randomized command)")
            ->required();
    };
    const auto constants_option = [&](CLI::App* cmd) {
        return cmd->add_option("--constants", cfg.constants_path, "constants override JSON file");
    };

    CLI::App* classify = add_command("classify", "classify a simplex family as crossed, loose, or tight");
    classify->add_option("--colors", cfg.colors_path, "family members, one point-set object each")
        ->required();
    classify->add_option("--dimension", cfg.dimension, "expected ambient dimension");

    CLI::App* partition = add_command("partition", "build a simplicial r-partition");
    points_option(partition);
    partition->add_option("--r", cfg.r, "part count")->required()->check(CLI::PositiveNumber);
    seed_option(partition);

    CLI::App* census = add_command("census", "classify all cell tuples of an r-partition");
    points_option(census);
    census->add_option("--r", cfg.r, "part count")->required()->check(CLI::PositiveNumber);
    census->add_option("--edges", cfg.edges_path, "optional edge JSON file");
    seed_option(census);

    CLI::App* colored = add_command("colored-census", "per-color partitions and transversal tuple counts");
    colored->add_option("--colors", cfg.colors_path, "color classes JSON file")->required();
    colored->add_option("--r", cfg.r, "part count per class")->required()->check(CLI::PositiveNumber);
    seed_option(colored);

    CLI::App* select = add_command("select", "piercing point selection over an edge set");
    points_option(select);
    select->add_option("--edges", cfg.edges_path, "edge JSON file")->required();
    select->add_option("--r", cfg.r, "fixed partition granularity")->check(CLI::PositiveNumber);
    select->add_option("--n0", cfg.n0, "brute-force base threshold")->check(CLI::PositiveNumber);
    seed_option(select);
    constants_option(select);

    CLI::App* oracle = add_command("oracle-depth", "exact deepest point over an edge set");
    points_option(oracle);
    oracle->add_option("--edges", cfg.edges_path, "edge JSON file")->required();

    CLI::App* colorful = add_command("colorful-depth", "exact deepest point over colorful simplices");
    colorful->add_option("--colors", cfg.colors_path, "color classes JSON file")->required();

    CLI::App* pinning = add_command("pinning", "pinned loose families among random boundary facets");
    pinning->add_option("--colors", cfg.colors_path, "input simplices, one point-set object each")
        ->required();
    pinning->add_option("--dimension", cfg.dimension, "expected ambient dimension");
    seed_option(pinning);
    constants_option(pinning);

    CLI::App* turan = add_command("turan", "complete product block inside a dense semialgebraic relation");
    turan->add_option("--input", cfg.input_path, "relation JSON file")->required();
    turan->add_option("--colors", cfg.colors_path, "vertex classes JSON file")->required();
    turan->add_option("--eps", cfg.eps_text, "density threshold, rational")->required();
    seed_option(turan);
    constants_option(turan);

    CLI::App* same_type = add_command("same-type", "k subsets with a single transversal order type");
    points_option(same_type);
    same_type->add_option("--k", cfg.k, "number of subsets")->required()->check(CLI::PositiveNumber);
    same_type->add_option("--r", cfg.r, "partition resolution override")->check(CLI::PositiveNumber);
    seed_option(same_type);
    constants_option(same_type);

    CLI::App* halving = add_command("halving", "count halving hyperplanes through d points");
    points_option(halving);

    CLI::App* ksets = add_command("ksets", "count k-sets cut off by a hyperplane");
    points_option(ksets);
    ksets->add_option("--k", cfg.k, "subset size")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run_command(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
