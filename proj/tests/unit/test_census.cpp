#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "pierce/census.hpp"

using namespace pierce;
using namespace pierce::fixtures;

namespace {

// Point groups with exact rational jitter around the given centers. Jitter
// magnitude stays below 1/100, far under the center separations used here.
PointSet clusters(const std::vector<Point>& centers, int per, std::uint64_t seed) {
    PointSet p;
    p.dimension = static_cast<int>(centers[0].size());
    Rng rng(seed);
    for (const auto& center : centers) {
        for (int t = 0; t < per; ++t) {
            Point q = center;
            for (auto& c : q) c += Rational(rng.int_in(-100, 100), 10007);
            p.points.push_back(std::move(q));
        }
    }
    return p;
}

std::vector<Point> corner_centers() { return {pti({0, 0}), pti({100, 0}), pti({200, 100})}; }

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
    return result;
}

}  // namespace

TEST_CASE("corner clusters census to a single tight tuple") {
    PointSet p = clusters(corner_centers(), 2, 31);
    REQUIRE(verify_generic(p.points, 2));
    auto partition = build_partition(p, 3, 7);
    REQUIRE(partition.parts[0].indices == std::vector<int>{0, 1});
    REQUIRE(partition.parts[1].indices == std::vector<int>{2, 3});
    REQUIRE(partition.parts[2].indices == std::vector<int>{4, 5});

    CensusResult census = tuple_census(partition, std::nullopt);
    CHECK(census.summary.r_nonempty == 3);
    CHECK(census.summary.tight == 1);
    CHECK(census.summary.crossed == 0);
    CHECK(census.summary.loose == 0);
    CHECK_FALSE(census.summary.has_edges);
    CHECK(census.summary.crowded == 0);
    CHECK(census.summary.tight_ambient == 0);
    CHECK_FALSE(census.summary.heaviest_tight_cells.has_value());
    REQUIRE(census.tuple_class.size() == 1);
    CHECK(census.tuple_class.at({0, 1, 2}) == FamilyClass::tight);
    CHECK(census.edge_kinds.empty());
}

TEST_CASE("near-collinear clusters census to a crossed tuple") {
    PointSet p = clusters({pti({0, 0}), pt({"100", "1/10"}), pti({200, 0})}, 2, 32);
    auto partition = build_partition(p, 3, 7);
    CensusResult census = tuple_census(partition, std::nullopt);
    CHECK(census.summary.crossed == 1);
    CHECK(census.summary.tight == 0);
    CHECK(census.summary.loose == 0);
}

TEST_CASE("edges split into crowded and ambient buckets") {
    PointSet p = clusters(corner_centers(), 2, 31);
    auto partition = build_partition(p, 3, 7);
    EdgeList edges = {{0, 1, 2}, {0, 2, 4}, {1, 3, 5}, {0, 1, 3}};
    CensusResult census = tuple_census(partition, edges);

    CHECK(census.summary.has_edges);
    CHECK(census.summary.crowded == 2);
    CHECK(census.summary.tight_ambient == 2);
    CHECK(census.summary.crossed_ambient == 0);
    CHECK(census.summary.loose_ambient == 0);
    REQUIRE(census.edge_kinds.size() == 4);
    CHECK(census.edge_kinds[0] == EdgeKind::crowded);
    CHECK(census.edge_kinds[1] == EdgeKind::tight_ambient);
    CHECK(census.edge_kinds[2] == EdgeKind::tight_ambient);
    CHECK(census.edge_kinds[3] == EdgeKind::crowded);
    CHECK(census.edge_ambient_cells[0] == std::vector<int>{0, 1});
    CHECK(census.edge_ambient_cells[1] == std::vector<int>{0, 1, 2});
    REQUIRE(census.summary.heaviest_tight_cells.has_value());
    CHECK(*census.summary.heaviest_tight_cells == std::vector<int>{0, 1, 2});
    CHECK(census.summary.heaviest_tight_load == 2);
}

TEST_CASE("edge validation") {
    PointSet p = clusters(corner_centers(), 2, 31);
    auto partition = build_partition(p, 3, 7);
    CHECK(thrown_code([&] { tuple_census(partition, EdgeList{{0, 1}}); }) ==
          Errc::invalid_argument);
    CHECK(thrown_code([&] { tuple_census(partition, EdgeList{{0, 1, 6}}); }) ==
          Errc::index_out_of_range);
    CHECK(thrown_code([&] { tuple_census(partition, EdgeList{{0, 1, -1}}); }) ==
          Errc::index_out_of_range);
}

TEST_CASE("census conservation and edge bookkeeping on random data") {
    PointSet p = random_point_set(60, 2, 41);
    auto partition = build_partition(p, 8, 13);
    REQUIRE(partition.nonempty_count() == 7);

    Rng rng(99);
    EdgeList edges;
    for (int t = 0; t < 30; ++t) {
        std::vector<int> e = rng.sample_indices(60, 3);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    CensusResult census = tuple_census(partition, edges);

    // Tuple counts exhaust the nonempty-cell triples.
    CHECK(census.summary.r_nonempty == 7);
    CHECK(census.summary.crossed + census.summary.loose + census.summary.tight == choose(7, 3));
    CHECK(static_cast<long long>(census.tuple_class.size()) == choose(7, 3));

    // The memo keys are exactly the 3-subsets of nonempty parts; the dummy
    // part (index 7) never appears.
    for (const auto& [cells, cls] : census.tuple_class) {
        REQUIRE(cells.size() == 3);
        CHECK(cells[0] >= 0);
        CHECK(cells[0] < cells[1]);
        CHECK(cells[1] < cells[2]);
        CHECK(cells[2] < 7);
    }

    // Edge buckets match an independent recount from the owner map.
    CHECK(census.summary.crowded + census.summary.crossed_ambient +
              census.summary.loose_ambient + census.summary.tight_ambient ==
          static_cast<long long>(edges.size()));
    const std::vector<int> owner = partition.point_to_part();
    std::map<std::vector<int>, long long> load;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::set<int> cells;
        for (int v : edges[e]) cells.insert(owner[v]);
        std::vector<int> ambient(cells.begin(), cells.end());
        CHECK(census.edge_ambient_cells[e] == ambient);
        if (ambient.size() < 3) {
            CHECK(census.edge_kinds[e] == EdgeKind::crowded);
            continue;
        }
        switch (census.tuple_class.at(ambient)) {
            case FamilyClass::crossed: CHECK(census.edge_kinds[e] == EdgeKind::crossed_ambient); break;
            case FamilyClass::loose: CHECK(census.edge_kinds[e] == EdgeKind::loose_ambient); break;
            case FamilyClass::tight:
                CHECK(census.edge_kinds[e] == EdgeKind::tight_ambient);
                ++load[census.edge_ambient_cells[e]];
                break;
        }
    }

    // Heaviest tight tuple: maximal load, lexicographically least among ties.
    if (census.summary.tight > 0) {
        REQUIRE(census.summary.heaviest_tight_cells.has_value());
        long long best = -1;
        std::vector<int> best_cells;
        for (const auto& [cells, cls] : census.tuple_class) {
            if (cls != FamilyClass::tight) continue;
            const auto it = load.find(cells);
            const long long l = it == load.end() ? 0 : it->second;
            if (l > best) {
                best = l;
                best_cells = cells;
            }
        }
        CHECK(census.summary.heaviest_tight_load == best);
        CHECK(*census.summary.heaviest_tight_cells == best_cells);
    } else {
        CHECK_FALSE(census.summary.heaviest_tight_cells.has_value());
    }
}

TEST_CASE("colored census on corner clusters") {
    std::vector<PointSet> colors;
    for (const auto& center : corner_centers()) colors.push_back(clusters({center}, 4, 51));

    SUBCASE("one cell per color") {
        ColoredCensus census = colored_tuple_census(colors, 1, 5);
        REQUIRE(census.partitions.size() == 3);
        for (const auto& partition : census.partitions) CHECK(partition.nonempty_count() == 1);
        CHECK(census.tight == 1);
        CHECK(census.crossed == 0);
        CHECK(census.loose == 0);
        REQUIRE(census.tight_tuples.size() == 1);
        CHECK(census.tight_tuples[0] == std::vector<int>{0, 0, 0});

        // Cell-level tightness promises a point in the convex hull of every
        // colorful data selection; the bounded intersection cell's centroid
        // is such a point.
        std::vector<Simplex> cells;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            cells.push_back(census.partitions[i].parts[census.tight_tuples[0][i]].cell);
        }
        DeltaCell delta = delta_cell(make_family(2, cells));
        REQUIRE(delta.kind == DeltaKind::bounded_simplex);
        const Point x = delta.cell->centroid();
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                for (int c = 0; c < 4; ++c) {
                    Simplex s = make_simplex(
                        {colors[0].points[a], colors[1].points[b], colors[2].points[c]}, 2);
                    CHECK(point_in_simplex(x, s, Containment::closed));
                }
            }
        }
    }

    SUBCASE("small classes fall back to singleton parts") {
        colors[0].points.resize(2);
        ColoredCensus census = colored_tuple_census(colors, 4, 5);
        CHECK(census.partitions[0].r == 2);
        CHECK(census.partitions[1].r == 4);
        CHECK(census.tight == 2 * 4 * 4);
        CHECK(census.crossed == 0);
        CHECK(census.loose == 0);
        CHECK(census.tight_tuples.size() == 32);
    }

    SUBCASE("determinism") {
        ColoredCensus a = colored_tuple_census(colors, 2, 17);
        ColoredCensus b = colored_tuple_census(colors, 2, 17);
        CHECK(a.crossed == b.crossed);
        CHECK(a.loose == b.loose);
        CHECK(a.tight == b.tight);
        CHECK(a.tight_tuples == b.tight_tuples);
    }
}

TEST_CASE("colored census validation") {
    std::vector<PointSet> colors;
    for (const auto& center : corner_centers()) colors.push_back(clusters({center}, 3, 52));

    CHECK(thrown_code([&] { colored_tuple_census({}, 2, 1); }) == Errc::empty_color_class);
    CHECK(thrown_code([&] {
              colored_tuple_census({colors[0], colors[1]}, 2, 1);
          }) == Errc::invalid_argument);
    CHECK(thrown_code([&] { colored_tuple_census(colors, 0, 1); }) == Errc::invalid_r);

    auto empty_class = colors;
    empty_class[2].points.clear();
    CHECK(thrown_code([&] { colored_tuple_census(empty_class, 2, 1); }) ==
          Errc::empty_color_class);

    auto mixed = colors;
    mixed[1] = random_point_set(3, 3, 53);
    CHECK(thrown_code([&] { colored_tuple_census(mixed, 2, 1); }) == Errc::dimension_mismatch);
}

TEST_CASE("same-type extraction on corner clusters") {
    PointSet p = clusters(corner_centers(), 2, 31);

    SUBCASE("explicit r keeps the clusters whole") {
        SameTypeResult result = same_type_extract(p, 3, 3, 7);
        CHECK(result.r_used == 3);
        CHECK(result.chosen_parts == std::vector<int>{0, 1, 2});
        REQUIRE(result.subsets.size() == 3);
        CHECK(result.subsets[0] == std::vector<int>{0, 1});
        CHECK(result.subsets[1] == std::vector<int>{2, 3});
        CHECK(result.subsets[2] == std::vector<int>{4, 5});
        REQUIRE(result.order_type.size() == 1);

        // Every colorful selection from the subsets realizes the stored sign.
        for (int a : result.subsets[0]) {
            for (int b : result.subsets[1]) {
                for (int c : result.subsets[2]) {
                    CHECK(orientation({p.points[a], p.points[b], p.points[c]}) ==
                          result.order_type[0]);
                }
            }
        }
    }

    SUBCASE("automatic r clamps to n and returns singletons") {
        SameTypeResult result = same_type_extract(p, 3, std::nullopt, 7);
        CHECK(result.r_used == 6);
        REQUIRE(result.subsets.size() == 3);
        std::set<int> origins;
        for (const auto& subset : result.subsets) {
            REQUIRE(subset.size() == 1);
            origins.insert(subset[0] / 2);
        }
        // One point per cluster: same-cluster cells admit both orientations.
        CHECK(origins.size() == 3);
        REQUIRE(result.order_type.size() == 1);
        CHECK(orientation({p.points[result.subsets[0][0]], p.points[result.subsets[1][0]],
                           p.points[result.subsets[2][0]]}) == result.order_type[0]);
    }

    SUBCASE("determinism") {
        SameTypeResult a = same_type_extract(p, 3, 3, 11);
        SameTypeResult b = same_type_extract(p, 3, 3, 11);
        CHECK(a.subsets == b.subsets);
        CHECK(a.order_type == b.order_type);
        CHECK(a.chosen_parts == b.chosen_parts);
    }
}

TEST_CASE("same-type extraction on random points") {
    PointSet p = random_point_set(12, 2, 61);
    SameTypeResult result = same_type_extract(p, 4, std::nullopt, 19);
    CHECK(result.r_used == 12);
    REQUIRE(result.subsets.size() == 4);
    REQUIRE(result.order_type.size() == 4);

    // Each subset is a singleton here, so the stored order type must be the
    // orientation vector of the four chosen points over lex triples.
    std::vector<int> chosen;
    for (const auto& subset : result.subsets) {
        REQUIRE(subset.size() == 1);
        chosen.push_back(subset[0]);
    }
    int at = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                const int sign =
                    orientation({p.points[chosen[i]], p.points[chosen[j]], p.points[chosen[k]]});
                CHECK(sign != 0);
                CHECK(sign == result.order_type[at]);
                ++at;
            }
        }
    }
}

TEST_CASE("same-type extraction argument validation") {
    PointSet p = clusters(corner_centers(), 2, 31);
    CHECK(thrown_code([&] { same_type_extract(p, 2, std::nullopt, 1); }) == Errc::invalid_k);
    CHECK(thrown_code([&] { same_type_extract(p, 7, std::nullopt, 1); }) ==
          Errc::insufficient_points);
    CHECK(thrown_code([&] { same_type_extract(p, 3, 2, 1); }) == Errc::invalid_r);
    CHECK(thrown_code([&] { same_type_extract(p, 3, 7, 1); }) == Errc::invalid_r);
}

TEST_CASE("flat convex data admits no homogeneous clique") {
    // Points on the strictly convex arc y = 1/(97 + 13x): generic, but so
    // flat that every cell triple is crossed by a near-horizontal line.
    PointSet p;
    p.dimension = 2;
    for (int i = 0; i < 12; ++i) {
        p.points.push_back({Rational(i), Rational(1, 97 + 13 * i)});
    }
    REQUIRE(verify_generic(p.points, 2));
    CHECK(thrown_code([&] { same_type_extract(p, 3, 4, 7); }) == Errc::clique_not_found);
}
