#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "srgraph/families.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/resolving.hpp"
#include "test_util.hpp"

using namespace srgraph;

namespace {

VertexSet by_name(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s(g.order());
    for (auto n : names) s.insert(*g.find(n));
    return s;
}

Graph matching(std::size_t k) {
    Graph acc;
    for (std::size_t i = 0; i < k; ++i) acc = disjoint_union(acc, make(family::Path{2}));
    return acc;
}

}  // namespace

TEST_CASE("MMD relation matches the definition on every small connected graph") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : connected_classes(n)) {
            const auto a = oracle::adjacency(g);
            const auto d = oracle::floyd_warshall(a);
            const auto rel = mmd_relation(g);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    REQUIRE(rel.maximally_distant[u].contains(v) == oracle::maximally_distant(a, d, v, u));
                    REQUIRE(rel.mmd(u, v) == oracle::mmd(a, d, u, v));
                }
        }
}

TEST_CASE("ten-vertex drawing: distances, maximally distant set and boundary") {
    const auto g = fixture("fig2");
    const auto d = all_pairs_distances(g);
    CHECK(d.at(*g.find("a"), *g.find("g")) == Distance(5));
    CHECK(maximally_distant_from(g, *g.find("d")) == by_name(g, {"a", "f", "g", "h", "i"}));
    CHECK(boundary(g).boundary == by_name(g, {"a", "b", "d", "f", "g", "h", "i", "j"}));
}

TEST_CASE("both boundary characterisations coincide") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_connected(rng, 2 + trial % 12, 0.3);
        CHECK(maximal_distance_boundary(g) == boundary(g).boundary);
    }
}

TEST_CASE("SR graphs of the catalogued families") {
    const auto c5 = make(family::Cycle{5});
    CHECK(are_isomorphic(srg(c5), c5));
    CHECK(are_isomorphic(srg(make(family::Path{6})), make(family::Path{2})));
    CHECK(are_isomorphic(srg(make(family::Star{4})), make(family::Complete{4})));
    CHECK(are_isomorphic(srg(make(family::Cycle{8})), matching(4)));
    CHECK(are_isomorphic(srg(make(family::Hypercube{3})), matching(4)));
    CHECK(are_isomorphic(srg(make(family::CompleteMultipartite{{2, 3}})),
                         disjoint_union(make(family::Complete{2}), make(family::Complete{3}))));
    CHECK(are_isomorphic(srg(make(family::FamilyFP{9})), make(family::Path{9})));
    CHECK(are_isomorphic(srg(complement(make(family::Cycle{7}))), make(family::Cycle{7})));
}

TEST_CASE("SR graph keeps boundary vertices and their names") {
    const auto g = fixture("fig5");
    const auto s = srg(g);
    const auto plus = srg_plus_i(g);
    const auto b = boundary(g).boundary;
    CHECK(s.order() == b.size());
    CHECK(plus.order() == g.order());
    CHECK(plus.size() == s.size());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!b.contains(v)) CHECK(plus.degree(v) == 0);
    CHECK(names_of(g, b) == s.labels());
    const auto rel = mmd_relation(g);
    for (auto [u, v] : s.edges()) CHECK(rel.mmd(*g.find(s.name(u)), *g.find(s.name(v))));
}

TEST_CASE("G* and its trimmed form") {
    const auto p4 = make(family::Path{4});
    const auto gs = g_star(p4);
    CHECK(gs.size() == 3);  // pairs at distance >= 2
    CHECK(g_star_minus(make(family::Star{3})).order() == 3);
    // true twins are joined as well
    CHECK(g_star(make(family::Complete{3})).size() == 3);
    // disconnected pairs count as far apart
    CHECK(g_star(make(family::Empty{3})).size() == 3);
}

TEST_CASE("TF-graph drops twin pairs") {
    const auto paw = fixture("paw");
    const auto t = srs(paw);
    const auto bv = boundary(paw);
    CHECK(t.order() == bv.tf_boundary.size());
    CHECK(bv.tf_boundary.is_subset_of(bv.boundary));
    for (auto [u, v] : t.edges()) CHECK_FALSE(are_true_twins(paw, *paw.find(t.name(u)), *paw.find(t.name(v))));
    CHECK(error_of([] { srs(make(family::Complete{4})); }) == ErrorCode::CompleteInput);
}

TEST_CASE("2MMF and connectivity preconditions") {
    CHECK(is_2mmf(make(family::Cycle{7})));
    CHECK_FALSE(is_2mmf(make(family::Cycle{5})));
    CHECK(is_2mmf(fixture("h7")));
    CHECK(error_of([] { srg(make(family::Empty{2})); }) == ErrorCode::Disconnected);
    CHECK(error_of([] { require_connected(make(family::Empty{3}), "test"); }) == ErrorCode::Disconnected);
}
