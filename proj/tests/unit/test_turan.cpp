#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pierce/family.hpp"
#include "pierce/turan.hpp"

using namespace pierce;
using pierce::fixtures::pti;
using pierce::fixtures::random_point_set;
using pierce::fixtures::thrown_code;

namespace {

// Exact edge count of a bipartite instance by direct scan.
long long count_edges(const BipartiteInstance& inst) {
    long long edges = 0;
    for (const auto& a : inst.v1.points) {
        for (const auto& b : inst.v2.points) edges += eval_relation(inst.relation, {a, b});
    }
    return edges;
}

void check_block_shape(const TuranBlock& block, int k) {
    REQUIRE(static_cast<int>(block.subsets.size()) == k);
    long long product = 1;
    for (const auto& w : block.subsets) {
        CHECK(!w.empty());
        CHECK(std::is_sorted(w.begin(), w.end()));
        product *= static_cast<long long>(w.size());
    }
    CHECK(block.size_product == product);
}

// One-dimensional k-partite sum relation: edge iff the coordinates sum to a
// positive number.
SemiAlgRelation sum_positive_relation(int k) {
    Polynomial poly;
    for (int i = 0; i < k; ++i) {
        Monomial m{Rational(1), std::vector<int>(k, 0)};
        m.exponents[i] = 1;
        poly.monomials.push_back(std::move(m));
    }
    SemiAlgRelation rel;
    rel.block_dims.assign(k, 1);
    rel.polys.push_back(std::move(poly));
    rel.formula = Formula::negation_of(Formula::atom_leq(0));
    rel.degree = 1;
    return rel;
}

PointSet line_points(const std::vector<int>& values) {
    PointSet set;
    set.dimension = 1;
    for (int v : values) set.points.push_back({Rational(v)});
    return set;
}

}  // namespace

TEST_CASE("maximal packing keeps well-separated hyperedges") {
    SUBCASE("identical edges collapse to one") {
        const std::vector<std::vector<int>> edges{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
        CHECK(maximal_packing(10, edges, Rational(1, 10)) == std::vector<int>{0});
    }

    SUBCASE("disjoint large edges are both kept") {
        const std::vector<std::vector<int>> edges{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
        CHECK(maximal_packing(10, edges, Rational(1, 10)) == std::vector<int>{0, 1});
    }

    SUBCASE("delta one keeps a single representative of nested edges") {
        const std::vector<std::vector<int>> edges{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {0, 1, 2, 3, 4}};
        CHECK(maximal_packing(10, edges, Rational(1)) == std::vector<int>{0});
    }

    SUBCASE("every input edge stays close to some kept edge") {
        Rng rng(701);
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < 25; ++e) {
            std::vector<int> edge;
            for (int v = 0; v < 20; ++v) {
                if (rng.int_in(0, 1)) edge.push_back(v);
            }
            edges.push_back(std::move(edge));
        }
        const Rational delta(1, 4);
        const std::vector<int> kept = maximal_packing(20, edges, delta);
        REQUIRE(!kept.empty());
        for (const auto& edge : edges) {
            int best = 100;
            for (int k : kept) {
                std::vector<bool> a(20, false), b(20, false);
                for (int v : edge) a[v] = true;
                for (int v : edges[k]) b[v] = true;
                int diff = 0;
                for (int i = 0; i < 20; ++i) diff += a[i] != b[i];
                best = std::min(best, diff);
            }
            CHECK(Rational(best) <= delta * 20);
        }
    }

    SUBCASE("inputs are validated") {
        CHECK(thrown_code([] { maximal_packing(10, {}, Rational(0)); }) == Errc::invalid_argument);
        CHECK(thrown_code([] { maximal_packing(10, {}, Rational(2)); }) == Errc::invalid_argument);
        CHECK(thrown_code([] { maximal_packing(3, {{0, 5}}, Rational(1, 2)); }) ==
              Errc::index_out_of_range);
    }
}

TEST_CASE("mnet construction covers large hyperedges") {
    const PointSet ground = random_point_set(40, 2, 702);
    std::vector<int> everything(40);
    for (int i = 0; i < 40; ++i) everything[i] = i;

    SUBCASE("small scale degrades to singletons") {
        const std::vector<int> rho{3, 7, 11};
        const auto mnet = build_mnet(ground, rho, {rho}, Rational(1, 10), 4, 5);
        CHECK(mnet.used_singletons);
        CHECK(mnet.cover_verified);
        REQUIRE(mnet.elements.size() == 3);
        for (std::size_t i = 0; i < rho.size(); ++i) {
            CHECK(mnet.elements[i].members == std::vector<int>{rho[i]});
            CHECK(mnet.elements[i].region.substr(0, 5) == "point");
        }
    }

    SUBCASE("partitioned elements tile rho and are covered by it") {
        const auto mnet =
            build_mnet(ground, everything, {everything}, Rational(1, 2), 4, 5);
        CHECK(!mnet.used_singletons);
        CHECK(mnet.r_used == 4);
        CHECK(mnet.cover_verified);
        REQUIRE(!mnet.elements.empty());
        std::set<int> seen;
        for (const auto& element : mnet.elements) {
            CHECK(!element.members.empty());
            CHECK(element.region.substr(0, 4) == "cell");
            for (int v : element.members) CHECK(seen.insert(v).second);
        }
        // With every nonempty part above the keep floor the elements tile rho.
        CHECK(seen.size() == 40);
    }

    SUBCASE("inputs are validated") {
        CHECK(thrown_code([&] { build_mnet(ground, {}, {}, Rational(1, 2), 4, 5); }) ==
              Errc::invalid_argument);
        CHECK(thrown_code([&] { build_mnet(ground, {0}, {}, Rational(0), 4, 5); }) ==
              Errc::invalid_argument);
        CHECK(thrown_code([&] { build_mnet(ground, {0}, {}, Rational(1, 2), 0, 5); }) ==
              Errc::invalid_r);
        CHECK(thrown_code([&] { build_mnet(ground, {40}, {}, Rational(1, 2), 4, 5); }) ==
              Errc::index_out_of_range);
    }
}

TEST_CASE("bipartite extraction returns complete verified blocks") {
    SUBCASE("a complete instance returns the full classes") {
        BipartiteInstance inst;
        inst.relation = halfspace_relation({1, 0});
        inst.v1 = line_points({});
        inst.v1.dimension = 2;
        for (int i = 0; i < 5; ++i) inst.v1.points.push_back(pti({100 + i, i}));
        inst.v2.dimension = 2;
        for (int j = 0; j < 6; ++j) inst.v2.points.push_back(pti({-j, 3 * j}));

        const TuranBlock block = bipartite_turan(inst, Rational(1, 2));
        check_block_shape(block, 2);
        CHECK(block.complete);
        CHECK(block.size_product == 30);
        CHECK(block.subsets[0].size() == 5);
        CHECK(block.subsets[1].size() == 6);
        REQUIRE(block.region_note.has_value());
        CHECK(*block.region_note == "the full right class");
    }

    SUBCASE("an empty edge set is density too low") {
        BipartiteInstance inst;
        inst.relation = halfspace_relation({1, 0});
        inst.v1.dimension = 2;
        inst.v1.points = {pti({-100, 0}), pti({-90, 5})};
        inst.v2.dimension = 2;
        inst.v2.points = {pti({100, 0}), pti({90, 5})};
        CHECK(thrown_code([&] { bipartite_turan(inst, Rational(1, 10)); }) ==
              Errc::density_too_low);
    }

    SUBCASE("random halfspace instances yield nonempty complete blocks") {
        BipartiteInstance inst;
        inst.relation = halfspace_relation({2, -1});
        inst.v1 = random_point_set(40, 2, 703);
        inst.v2 = random_point_set(40, 2, 704);
        const long long edges = count_edges(inst);
        REQUIRE(edges > 0);
        const Rational eps(edges, 40LL * 40LL);

        const TuranBlock block = bipartite_turan(inst, eps, 9);
        check_block_shape(block, 2);
        CHECK(block.complete);
        REQUIRE(block.region_note.has_value());
        for (int i : block.subsets[0]) {
            for (int j : block.subsets[1]) {
                CHECK(eval_relation(inst.relation, {inst.v1.points[i], inst.v2.points[j]}));
            }
        }

        const TuranBlock repeat = bipartite_turan(inst, eps, 9);
        CHECK(repeat.subsets == block.subsets);
    }

    SUBCASE("inputs are validated") {
        BipartiteInstance inst;
        inst.relation = halfspace_relation({1, 0});
        inst.v1 = random_point_set(4, 2, 705);
        inst.v2 = random_point_set(4, 2, 706);
        CHECK(thrown_code([&] { bipartite_turan(inst, Rational(0)); }) == Errc::invalid_argument);
        CHECK(thrown_code([&] { bipartite_turan(inst, Rational(2)); }) == Errc::invalid_argument);

        BipartiteInstance empty = inst;
        empty.v1.points.clear();
        CHECK(thrown_code([&] { bipartite_turan(empty, Rational(1, 2)); }) == Errc::empty_edge_set);

        BipartiteInstance wrong = inst;
        wrong.relation = loose_relation(2);
        CHECK(thrown_code([&] { bipartite_turan(wrong, Rational(1, 2)); }) ==
              Errc::dimension_mismatch);

        BipartiteInstance skew = inst;
        skew.v2.dimension = 3;
        CHECK(thrown_code([&] { bipartite_turan(skew, Rational(1, 2)); }) ==
              Errc::dimension_mismatch);
    }
}

TEST_CASE("k-partite extraction composes through flattening") {
    SUBCASE("two classes delegate to the bipartite path") {
        BipartiteInstance inst;
        inst.relation = halfspace_relation({2, -1});
        inst.v1 = random_point_set(20, 2, 707);
        inst.v2 = random_point_set(20, 2, 708);
        const long long edges = count_edges(inst);
        REQUIRE(edges > 0);
        const Rational eps(edges, 400);

        const TuranBlock direct = bipartite_turan(inst, eps, 3);
        const TuranBlock viaK = kpartite_turan({inst.v1, inst.v2}, inst.relation, eps, 3);
        CHECK(viaK.subsets == direct.subsets);
        CHECK(viaK.complete == direct.complete);
        CHECK(viaK.size_product == direct.size_product);
    }

    SUBCASE("a complete three-partite instance returns all full classes") {
        const std::vector<PointSet> classes{line_points({10, 20}), line_points({1, 2, 3}),
                                            line_points({5, 6})};
        const TuranBlock block = kpartite_turan(classes, sum_positive_relation(3), Rational(1));
        check_block_shape(block, 3);
        CHECK(block.complete);
        CHECK(block.size_product == 12);
        CHECK(block.subsets[0] == std::vector<int>{0, 1});
        CHECK(block.subsets[1] == std::vector<int>{0, 1, 2});
        CHECK(block.subsets[2] == std::vector<int>{0, 1});
    }

    SUBCASE("a mixed three-partite instance yields a verified complete product") {
        const std::vector<PointSet> classes{line_points({-9, 1, 4}), line_points({-2, 0, 3, 7}),
                                            line_points({-6, 2, 5})};
        const SemiAlgRelation rel = sum_positive_relation(3);
        long long edges = 0;
        for (const auto& a : classes[0].points) {
            for (const auto& b : classes[1].points) {
                for (const auto& c : classes[2].points) {
                    edges += (a[0] + b[0] + c[0] > 0);
                }
            }
        }
        REQUIRE(edges > 0);
        REQUIRE(edges < 36);
        const Rational eps(edges, 36);

        const TuranBlock block = kpartite_turan(classes, rel, eps, 11);
        check_block_shape(block, 3);
        CHECK(block.complete);
        for (int a : block.subsets[0]) {
            for (int b : block.subsets[1]) {
                for (int c : block.subsets[2]) {
                    CHECK(classes[0].points[a][0] + classes[1].points[b][0] +
                              classes[2].points[c][0] >
                          0);
                }
            }
        }
    }

    SUBCASE("the loose relation composes end to end") {
        // Three classes of encoded segments with jointly generic vertices.
        Rng rng(709);
        std::vector<PointSet> classes(3);
        std::vector<std::vector<Simplex>> segments(3);
        std::vector<Point> vertices;
        for (int c = 0; c < 3; ++c) {
            classes[c].dimension = 4;
            for (int s = 0; s < 3; ++s) {
                Point a{Rational(rng.int_in(-4000, 4000), 16),
                        Rational(rng.int_in(-4000, 4000), 16)};
                Point b{Rational(rng.int_in(-4000, 4000), 16),
                        Rational(rng.int_in(-4000, 4000), 16)};
                segments[c].push_back(make_simplex({a, b}, 2));
                vertices.push_back(a);
                vertices.push_back(b);
                classes[c].points.push_back(
                    encode_simplex_block(segments[c].back().vertices, 2));
            }
        }
        REQUIRE(verify_generic(vertices, 2));

        long long loose_count = 0;
        for (const auto& s0 : segments[0]) {
            for (const auto& s1 : segments[1]) {
                for (const auto& s2 : segments[2]) {
                    loose_count +=
                        classify_family(make_family(2, {s0, s1, s2})) == FamilyClass::loose;
                }
            }
        }
        REQUIRE(loose_count > 0);
        const Rational eps(loose_count, 27);

        const SemiAlgRelation rel = loose_relation(2);
        const TuranBlock block = kpartite_turan(classes, rel, eps, 13);
        check_block_shape(block, 3);
        CHECK(block.complete);
        for (int a : block.subsets[0]) {
            for (int b : block.subsets[1]) {
                for (int c : block.subsets[2]) {
                    CHECK(classify_family(make_family(
                              2, {segments[0][a], segments[1][b], segments[2][c]})) ==
                          FamilyClass::loose);
                }
            }
        }
    }

    SUBCASE("density too low propagates") {
        const std::vector<PointSet> classes{line_points({-9, 1}), line_points({-2, 0}),
                                            line_points({-6, 2})};
        CHECK(thrown_code([&] {
            kpartite_turan(classes, sum_positive_relation(3), Rational(1));
        }) == Errc::density_too_low);
    }

    SUBCASE("inputs are validated") {
        const std::vector<PointSet> one{line_points({1, 2})};
        CHECK(thrown_code([&] { kpartite_turan(one, sum_positive_relation(1), Rational(1, 2)); }) ==
              Errc::invalid_argument);

        const std::vector<PointSet> pair{line_points({1, 2}), line_points({3})};
        CHECK(thrown_code([&] { kpartite_turan(pair, sum_positive_relation(3), Rational(1, 2)); }) ==
              Errc::dimension_mismatch);

        std::vector<PointSet> holed{line_points({1, 2}), line_points({})};
        CHECK(thrown_code([&] { kpartite_turan(holed, sum_positive_relation(2), Rational(1, 2)); }) ==
              Errc::empty_edge_set);
    }
}
