#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/resolving.hpp"
#include "srgraph/verify.hpp"
#include "test_util.hpp"

using namespace srgraph;

namespace {

VerifyOptions single(const std::string& instance) {
    VerifyOptions o;
    o.instance = instance;
    return o;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("srgraph_test_" + name)).string();
}

}  // namespace

TEST_CASE("grid text") {
    const auto cfg = parse_grid_config(R"(
# leading comment
[T20]
instance = C3 ; C3
square = P2 K3     # two words, four pairs
max_order = 5

[OBS1]
each = P4 C5 K3
)");
    REQUIRE(cfg.size() == 2);
    const auto& t20 = cfg.at("T20");
    CHECK(t20.instances.size() == 5);
    CHECK(t20.instances[0] == std::vector<std::string>{"C3", "C3"});
    CHECK(t20.instances[2] == std::vector<std::string>{"P2", "K3"});
    CHECK(t20.max_order == 5);
    CHECK(cfg.at("OBS1").instances.size() == 3);
    CHECK_FALSE(cfg.at("OBS1").max_order);

    CHECK(error_of([] { parse_grid_config("instance = P3\n"); }) == ErrorCode::MalformedInput);
    CHECK(error_of([] { parse_grid_config("[T3\n"); }) == ErrorCode::MalformedInput);
    CHECK(error_of([] { parse_grid_config("[T3]\nmax_order = six\n"); }) == ErrorCode::MalformedInput);
    CHECK(error_of([] { parse_grid_config("[T3]\ncolour = blue\n"); }) == ErrorCode::MalformedInput);
    CHECK(split_instance(" C5 ;K3 ") == std::vector<std::string>{"C5", "K3"});
    CHECK(error_of([] { split_instance(" ; "); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("built-in grids cover every theorem") {
    const auto ids = theorem_ids();
    CHECK(ids.size() == 47);
    for (const auto& id : ids) CHECK_MESSAGE(default_grids().contains(id), id);
}

TEST_CASE("single instances") {
    const auto r = verify_theorem("T20", single("C3 ; C3"));
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.checked == 1);
    CHECK(r.instances == std::vector<std::string>{"C3 ; C3"});
    CHECK_FALSE(r.anchor.empty());
    CHECK(verify_theorem("T12", single("C5")).verdict == Verdict::Pass);
    CHECK(verify_theorem("T4", single("petersen")).verdict == Verdict::Pass);
}

TEST_CASE("a failing instance carries a reproducible counterexample") {
    // P3 has diameter 2 and no true twins, yet its middle vertex lies outside the boundary.
    const auto p3 = make(family::Path{3});
    CHECK(all_pairs_distances(p3).diameter() == Distance(2));
    CHECK(is_true_twin_free(p3));
    CHECK(srg(p3).order() == 2);
    CHECK(complement(p3).order() == 3);

    const auto r = verify_theorem("T12", single("P3"));
    REQUIRE(r.verdict == Verdict::Fail);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->instance == "P3");
    CHECK(r.counterexample->graph6 == std::vector<std::string>{emit_graph6(p3)});
    CHECK(r.counterexample->command == "srgtool verify --theorem T12 --instance \"P3\"");
    CHECK_FALSE(r.reason.empty());
}

TEST_CASE("sweeps") {
    VerifyOptions o;
    o.max_order = 4;
    const auto r = verify_theorem("T4", o);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.checked >= 1 + 1 + 4 + 38);
    CHECK(r.instances.back() == "connected labeled graphs of order 1..4");

    VerifyOptions all;
    all.max_order = 4;
    const auto t5 = verify_theorem("T5", all);
    CHECK(t5.verdict == Verdict::Pass);
    CHECK(t5.instances.back() == "labeled graphs of order 1..4");

    VerifyOptions parallel = o;
    parallel.threads = 3;
    const auto p = verify_theorem("T4", parallel);
    CHECK(p.checked == r.checked);
    CHECK(p.skipped == r.skipped);

    // The sweep reaches the same literal failure as the single instance.
    VerifyOptions small;
    small.max_order = 3;
    const auto t12 = verify_theorem("T12", small);
    CHECK(t12.verdict == Verdict::Fail);
    REQUIRE(t12.counterexample);
    CHECK(are_isomorphic(parse_graph6(t12.counterexample->graph6.at(0)), make(family::Path{3})));
}

TEST_CASE("custom grids and filters") {
    GridConfig cfg = parse_grid_config("[T20]\ninstance = C3 ; C3\ninstance = C5 ; P4\n");
    VerifyOptions o;
    o.grids = &cfg;
    auto r = verify_theorem("T20", o);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.checked == 2);

    o.max_order = 4;
    r = verify_theorem("T20", o);
    CHECK(r.checked == 1);
    CHECK(r.skipped == 1);

    o.max_order = 2;
    r = verify_theorem("T20", o);
    CHECK(r.verdict == Verdict::Skipped);
    CHECK(r.reason == "operand order above --max-order");

    GridConfig none;
    VerifyOptions empty;
    empty.grids = &none;
    const auto e = verify_theorem("T20", empty);
    CHECK(e.verdict == Verdict::Skipped);
    CHECK(e.reason == "no instances");
}

TEST_CASE("verify errors") {
    CHECK(error_of([] { verify_theorem("T99", {}); }) == ErrorCode::UnknownTheorem);
    VerifyOptions big;
    big.max_order = 7;
    CHECK(error_of([&] { verify_theorem("T3", big); }) == ErrorCode::GridTooLarge);
    CHECK(error_of([] { verify_theorem("T20", single("Q3 ; Q3")); }) == ErrorCode::GridTooLarge);
    CHECK(error_of([] { verify_theorem("T20", single("C5")); }) == ErrorCode::InvalidParameter);
    CHECK(error_of([] { verify_theorem("T20", single("C5 ; nonsense")); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("realization search") {
    SearchOptions o;
    o.max_order = 6;
    const auto star = realization_search(make(family::Star{2}), o);
    CHECK(star.outcome == SearchOutcome::Exhausted);
    CHECK(star.classes_tested == 1 + 1 + 2 + 6 + 21 + 112);

    SearchOptions finish;
    finish.max_order = 5;
    finish.finish_order = true;
    const auto p4 = realization_search(make(family::Path{4}), finish);
    REQUIRE(p4.outcome == SearchOutcome::Found);
    CHECK(p4.order_reached == 5);
    for (const auto& g : p4.realizers) CHECK(are_isomorphic(srg(g), make(family::Path{4})));
    CHECK(std::ranges::any_of(p4.realizers,
                              [](const Graph& g) { return are_isomorphic(g, join_k1(make(family::Path{4}))); }));

    SearchOptions seeded;
    seeded.max_order = 3;
    seeded.seeds.push_back(make(family::FamilyFP{9}));
    const auto p9 = realization_search(make(family::Path{9}), seeded);
    CHECK(p9.outcome == SearchOutcome::Found);
    CHECK(p9.realizers.front().order() == 15);

    SearchOptions cap;
    cap.max_order = 9;
    CHECK(error_of([&] { realization_search(make(family::Path{3}), cap); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("search budget and resume") {
    const auto path = temp_path("frontier.json");
    std::filesystem::remove(path);
    SearchOptions o;
    o.max_order = 6;
    o.frontier_path = path;
    o.class_budget = 50;
    const auto first = realization_search(make(family::Cycle{4}), o);
    CHECK(first.outcome == SearchOutcome::Aborted);
    CHECK(first.classes_tested == 50);
    REQUIRE(std::filesystem::exists(path));

    o.resume = true;
    o.class_budget = 0;
    const auto rest = realization_search(make(family::Cycle{4}), o);
    CHECK(rest.outcome == SearchOutcome::Exhausted);
    CHECK(rest.classes_tested == 143);

    SearchOptions fresh;
    fresh.max_order = 6;
    CHECK(realization_search(make(family::Cycle{4}), fresh).tested_keys == rest.tested_keys);

    CHECK(error_of([&] { realization_search(make(family::Cycle{5}), o); }) == ErrorCode::InvalidParameter);
    {
        std::ofstream bad(path);
        bad << "{ not json";
    }
    CHECK(error_of([&] { realization_search(make(family::Cycle{4}), o); }) == ErrorCode::MalformedInput);
    std::filesystem::remove(path);
}
