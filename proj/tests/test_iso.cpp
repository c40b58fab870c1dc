#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "srgraph/families.hpp"
#include "srgraph/iso.hpp"
#include "test_util.hpp"

using namespace srgraph;

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_graph(rng, 1 + trial % 20, 0.1 + (trial % 7) * 0.12);
        const auto cf = canonical_form(g);
        for (int k = 0; k < 3; ++k) {
            const auto h = permute(g, oracle::random_permutation(rng, g.order()));
            CHECK(canonical_form(h) == cf);
            CHECK(canonical_form(h).key() == cf.key());
            const auto r = isomorphism(g, h);
            REQUIRE(r.isomorphic);
            CHECK(is_isomorphism(g, h, *r.mapping));
        }
        const auto h = permute(g, oracle::random_permutation(rng, g.order()));
        CHECK(permute(h, canonical_form(h).labeling) == permute(g, cf.labeling));
    }
}

TEST_CASE("isomorphism decisions match permutation search") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = 1 + trial % 7;
        const auto g = oracle::random_graph(rng, n, 0.5);
        const auto h = oracle::random_graph(rng, n, 0.5);
        const bool expected = oracle::isomorphic(g, h);
        CHECK(are_isomorphic(g, h) == expected);
        CHECK((canonical_form(g) == canonical_form(h)) == expected);
        const auto r = isomorphism(g, h);
        CHECK(r.isomorphic == expected);
        CHECK(r.mapping.has_value() == expected);
    }
}

TEST_CASE("hard regular pairs") {
    // Same degree sequence, different graphs.
    CHECK_FALSE(are_isomorphic(make(family::Cycle{6}),
                               disjoint_union(make(family::Cycle{3}), make(family::Cycle{3}))));
    CHECK_FALSE(are_isomorphic(make(family::Hypercube{3}), complement(make(family::Hypercube{3}))));
    CHECK(are_isomorphic(make(family::CompleteBipartite{3, 3}), complement(disjoint_union(make(family::Complete{3}),
                                                                                           make(family::Complete{3})))));
    CHECK(are_isomorphic(make(family::Cycle{5}), complement(make(family::Cycle{5}))));
    const auto p = make(family::Petersen{});
    std::mt19937 rng(79);
    CHECK(are_isomorphic(p, permute(p, oracle::random_permutation(rng, 10))));
    CHECK_FALSE(are_isomorphic(make(family::Hamming{2, 3}), make(family::Petersen{}).induced(VertexSet(10, {0, 1, 2, 3, 4, 5, 6, 7, 8}))));
}

TEST_CASE("class keys separate the connected classes") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::string> keys;
        for (const auto& g : connected_classes(n)) keys.insert(canonical_form(g).key());
        CHECK(keys.size() == connected_classes(n).size());
    }
}

TEST_CASE("mapping validity checks") {
    const auto p3 = make(family::Path{3});
    CHECK(is_isomorphism(p3, p3, {0, 1, 2}));
    CHECK(is_isomorphism(p3, p3, {2, 1, 0}));
    CHECK_FALSE(is_isomorphism(p3, p3, {1, 0, 2}));
    CHECK_FALSE(is_isomorphism(p3, p3, {0, 0, 2}));
    CHECK_FALSE(is_isomorphism(p3, p3, {0, 1}));
    CHECK_FALSE(isomorphism(p3, make(family::Path{4})).isomorphic);
    CHECK(error_of([&] { permute(p3, {0, 1}); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("permute carries labels") {
    const auto paw = fixture("paw");
    const auto q = permute(paw, {3, 2, 1, 0});
    CHECK(q.name(0) == "d");
    CHECK(q.adjacent(*q.find("c"), *q.find("d")));
    CHECK(q.adjacent(*q.find("a"), *q.find("b")));
}

TEST_CASE("spanning subgraphs by label") {
    const auto k4 = make(family::Complete{4});
    const auto c4 = make(family::Cycle{4});
    CHECK(is_spanning_subgraph(c4, k4));
    CHECK_FALSE(is_spanning_subgraph(k4, c4));
    const auto shuffled = permute(c4, {1, 0, 2, 3});
    CHECK(is_spanning_subgraph(c4, shuffled));
    CHECK(is_spanning_subgraph(shuffled, c4));
    CHECK(error_of([&] { is_spanning_subgraph(c4, make(family::Complete{5})); }) == ErrorCode::LabelMismatch);
    CHECK(error_of([&] { is_spanning_subgraph(c4, k4.with_labels({"w", "x", "y", "z"})); }) ==
          ErrorCode::LabelMismatch);
}

TEST_CASE("order cap") {
    CHECK(canonical_form(make(family::Cycle{64})).order == 64);
    CHECK(error_of([] { canonical_form(make(family::Cycle{65})); }) == ErrorCode::OrderTooLarge);
}
