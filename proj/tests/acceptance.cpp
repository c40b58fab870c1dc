// One line per acceptance criterion: "criterion N  PASS|FAIL  <elapsed>  <summary>".
// Run with --criterion N for a single criterion; the exit status is 1 if any selected criterion fails.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "srgraph/families.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/products.hpp"
#include "srgraph/resolving.hpp"
#include "srgraph/strong_dimension.hpp"
#include "srgraph/verify.hpp"

using namespace srgraph;

namespace {

struct Check {
    std::size_t passed = 0;
    std::vector<std::string> failures;

    void operator()(bool ok, const std::string& what) {
        if (ok) ++passed;
        else failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
    std::string summary() const {
        std::ostringstream s;
        s << passed << " checks passed";
        if (!failures.empty()) {
            s << ", " << failures.size() << " failed:";
            for (std::size_t i = 0; i < failures.size() && i < 5; ++i) s << "\n      - " << failures[i];
        }
        return s.str();
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Check&)> body;
};

std::size_t leaves(const Graph& t) {
    std::size_t n = 0;
    for (Vertex v = 0; v < t.order(); ++v) n += t.degree(v) == 1;
    return n;
}

Graph random_pruefer_tree(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    return make(family::TreeFromPruefer{seq});
}

Graph copies(std::size_t k, const Graph& g) {
    Graph out = g;
    for (std::size_t i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

void dims_both(Check& c, const Graph& g, std::size_t expected, const std::string& name) {
    const auto a = dims_oracle(g).dimension, b = dims_via_srg(g).dimension;
    c(a == expected && b == expected, name + ": expected " + std::to_string(expected) + ", oracle " +
                                          std::to_string(a) + ", srg route " + std::to_string(b));
}

void verify_all(Check& c, const std::vector<std::string>& ids, const VerifyOptions& opts) {
    for (const auto& id : ids) {
        const auto r = verify_theorem(id, opts);
        std::string what = id + " " + std::string(to_string(r.verdict)) + " (checked " + std::to_string(r.checked) +
                           ", skipped " + std::to_string(r.skipped) + ")";
        if (r.counterexample) what += " on " + r.counterexample->instance + ": " + r.counterexample->detail;
        else if (r.verdict == Verdict::Skipped) what += ": " + r.reason;
        c(r.verdict == Verdict::Pass, what);
    }
}

void closed_forms(Check& c) {
    for (std::size_t n = 2; n <= 10; ++n) dims_both(c, make(family::Path{n}), 1, "P" + std::to_string(n));
    for (std::size_t n = 2; n <= 8; ++n) dims_both(c, make(family::Complete{n}), n - 1, "K" + std::to_string(n));
    for (std::size_t n = 3; n <= 12; ++n) dims_both(c, make(family::Cycle{n}), (n + 1) / 2, "C" + std::to_string(n));
    std::mt19937 rng(2024);
    for (int i = 0; i < 20; ++i) {
        const auto t = random_pruefer_tree(rng, 3 + i % 8);
        dims_both(c, t, leaves(t) - 1, "tree " + std::to_string(i) + " of order " + std::to_string(t.order()));
    }
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t t = 1; t <= 4; ++t)
            dims_both(c, make(family::CompleteBipartite{r, t}), r + t - 2,
                      "K" + std::to_string(r) + "," + std::to_string(t));
}

void eight_vertex_fixture(Check& c) {
    const auto g = fixture("fig5");
    const auto cover_graph = srg_plus_i(g);
    for (const auto& r : {dims_oracle(g), dims_via_srg(g)}) {
        c(r.dimension == 4, std::string(to_string(r.route)) + " dimension " + std::to_string(r.dimension));
        c(is_vertex_cover(cover_graph, r.basis), std::string(to_string(r.route)) + " basis covers the srg edges");
        c(is_strong_generator(g, r.basis), std::string(to_string(r.route)) + " basis is a generator");
    }
    VertexSet witness(g.order());
    for (auto name : {"a", "c", "d", "h"}) witness.insert(*g.find(name));
    c(is_strong_generator(g, witness), "{a,c,d,h} is a strong metric generator");
}

void reduction(Check& c) {
    VerifyOptions o;
    o.max_order = 6;
    o.threads = 1;
    verify_all(c, {"T3", "T4"}, o);
}

void gallai(Check& c) {
    VerifyOptions o;
    o.max_order = 6;
    verify_all(c, {"T5"}, o);
}

void sr_catalog(Check& c) {
    auto iso = [&](const Graph& g, const Graph& expected, const std::string& name) {
        c(are_isomorphic(srg(g), expected), name);
    };
    for (std::size_t k = 2; k <= 6; ++k)
        iso(make(family::Cycle{2 * k}), copies(k, make(family::Complete{2})), "C" + std::to_string(2 * k));
    for (std::size_t k = 1; k <= 5; ++k) iso(make(family::Cycle{2 * k + 1}), make(family::Cycle{2 * k + 1}),
                                             "C" + std::to_string(2 * k + 1));
    for (std::size_t l = 2; l <= 6; ++l) iso(make(family::Star{l}), make(family::Complete{l}), "S" + std::to_string(l));
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto t = random_pruefer_tree(rng, 3 + i % 8);
        iso(t, make(family::Complete{leaves(t)}), "tree " + std::to_string(i));
    }
    const std::vector<std::vector<std::size_t>> part_lists = {{2, 2}, {2, 3}, {3, 3},    {2, 2, 2}, {2, 2, 3},
                                                              {2, 3, 3}, {3, 3, 3}, {2, 2, 2, 2}};
    for (const auto& parts : part_lists) {
        Graph expected = make(family::Complete{parts[0]});
        for (std::size_t i = 1; i < parts.size(); ++i) expected = disjoint_union(expected, make(family::Complete{parts[i]}));
        std::string name = "K";
        for (auto p : parts) name += std::to_string(p) + ",";
        iso(make(family::CompleteMultipartite{parts}), expected, name);
    }
}

constexpr const char* kProductGrid = R"(
[T20]
square = P2 P3 P4 C3 C4 C5 K1,3
[C28]
instance = K3 ; K3
instance = K3 ; K4
instance = K4 ; K4
[C29]
instance = K3 ; K3
instance = K3 ; K4
instance = K4 ; K4
[P30]
each = C4 C5 C6 C7 C8 C9
[P31]
each = P2 P3 P4 P5 P6
[R32]
instance = K1,2 ; K3
instance = K2,2 ; K3
instance = K2,3 ; K4
[T27]
instance = h7 ; K3
instance = C7 ; K3
[T33]
instance = C5 ; K1,2
instance = petersen ; K2,2
[T34]
instance = C5 ; C5
instance = C5 ; petersen
[P19]
instance = P3 ; N2
instance = C4 ; N3
instance = P4 ; N2
instance = K1,2 ; N2
instance = P3 ; P3
instance = C5 ; K2
instance = K2 ; P4
instance = P4 ; C4
instance = N2 ; P4
instance = N3 ; C5
instance = co:P4 ; P5
instance = N2 ; K1,3
[P35]
instance = P3 ; N2
instance = C4 ; N3
instance = P4 ; N2
instance = K1,2 ; N2
instance = P3 ; P3
instance = C5 ; K2
instance = K2 ; P4
instance = P4 ; C4
instance = N2 ; P4
instance = N3 ; C5
instance = co:P4 ; P5
instance = N2 ; K1,3
[T37]
square = P3 C3 C5 K1,3
[L36]
square = P3 C3 C5 K1,3
[P42]
instance = P4 ; P3
instance = paw ; P4
instance = K3 ; P3
instance = P4 ; K3
[P43]
instance = P4 ; P3
instance = paw ; P4
instance = K3 ; P3
instance = P4 ; K3
[P44]
instance = P4 ; P3
instance = paw ; P4
instance = K3 ; P3
instance = P4 ; K3
# none of the four above has a complete first factor and Delta(H) <= |H|-2
instance = K3 ; P4
[P45]
instance = P4 ; P3
instance = paw ; P4
instance = K3 ; P3
instance = P4 ; K3
[COR-SR]
instance = P2 ; K2
instance = P2 ; N2
instance = P2 ; P3
instance = P3 ; K2
instance = P3 ; N2
instance = P3 ; P3
instance = C3 ; K2
instance = C3 ; N2
instance = C3 ; P3
)";

void product_theorems(Check& c) {
    auto grid = parse_grid_config(kProductGrid);
    // P30 and P31 fix t = 3.
    for (auto id : {"P30", "P31"})
        for (auto& inst : grid[id].instances) inst.push_back("K3");
    VerifyOptions o;
    o.grids = &grid;
    std::vector<std::string> ids;
    for (const auto& [id, g] : grid) ids.push_back(id);
    verify_all(c, ids, o);
}

void realization(Check& c) {
    SearchOptions none;
    none.max_order = 7;
    for (auto spec : {"K1,2", "K1,3", "C4"}) {
        const auto r = realization_search(graph_from_spec(spec), none);
        c(r.outcome == SearchOutcome::Exhausted,
          std::string(spec) + " " + std::string(to_string(r.outcome)) + " after " + std::to_string(r.classes_tested) +
              " classes");
    }
    auto found = [&](const std::string& target, const Graph& construction, SearchOptions o) {
        o.finish_order = true;
        const auto r = realization_search(graph_from_spec(target), o);
        const bool match = std::ranges::any_of(r.realizers, [&](const Graph& g) { return are_isomorphic(g, construction); });
        c(r.outcome == SearchOutcome::Found && match,
          target + " " + std::string(to_string(r.outcome)) + (match ? "" : " without the expected construction"));
    };
    SearchOptions small;
    small.max_order = 5;
    found("P4", join_k1(make(family::Path{4})), small);
    SearchOptions seeded;
    seeded.max_order = 7;
    seeded.seeds.push_back(make(family::FamilyFP{9}));
    found("P9", make(family::FamilyFP{9}), seeded);
    SearchOptions seven;
    seven.max_order = 7;
    found("C7", complement(make(family::Cycle{7})), seven);
}

void petersen(Check& c) {
    const auto p = make(family::Petersen{});
    const auto brute = oracle::strong_dimension(p);
    c(brute == 8, "subset oracle gives " + std::to_string(brute));
    dims_both(c, p, 8, "petersen");
    c(independence_number(p) == 4 && oracle::independence_number(p) == 4, "independence number 4");
}

void distances(Check& c) {
    std::mt19937 rng(99);
    std::size_t pairs = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, 1 + trial % 5, 0.5);
        const auto h = oracle::random_graph(rng, 1 + (trial / 5) % 5, 0.5);
        for (auto k : {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong, ProductKind::Lexicographic,
                       ProductKind::CartesianSum, ProductKind::Corona}) {
            const auto p = product(k, g, h);
            const auto ref = oracle::distances(p);
            bool ok = true;
            for (Vertex x = 0; x < p.order(); ++x)
                for (Vertex y = 0; y < p.order(); ++y, ++pairs)
                    ok = ok && oracle::to_int(product_distance(k, g, h, x, y)) == ref[x][y];
            c(ok, std::string(to_string(k)) + " on random pair " + std::to_string(trial));
        }
    }
    const int table[5][5] = {{0, 4, 2, 2, 4}, {4, 1, 3, 3, 1}, {2, 3, 2, 2, 3}, {2, 3, 2, 2, 3}, {4, 1, 3, 3, 1}};
    const auto c5 = make(family::Cycle{5});
    const auto bfs = bfs_distances(product(ProductKind::Direct, c5, c5), 0);
    for (Vertex hi = 0; hi < 5; ++hi)
        for (Vertex gj = 0; gj < 5; ++gj) {
            const auto y = pair_index(c5, gj, hi);
            c(oracle::to_int(bfs[y]) == table[hi][gj] &&
                  oracle::to_int(product_distance(ProductKind::Direct, c5, c5, 0, y)) == table[hi][gj],
              "C5 x C5 distance to (g" + std::to_string(gj + 1) + ",h" + std::to_string(hi + 1) + ")");
        }
}

void boundary_suite(Check& c) {
    VerifyOptions o;
    o.max_order = 6;
    verify_all(c, {"R1", "L9", "L6", "L7", "T8", "P11", "T12"}, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "closed-form dimensions", 10, closed_forms},
        {2, "eight-vertex fixture", 1, eight_vertex_fixture},
        {3, "reduction theorem, connected order <= 6", 600, reduction},
        {4, "Gallai identity, order <= 6", 600, gallai},
        {5, "strong resolving graph catalog", 5, sr_catalog},
        {6, "product theorems on fixed grids", 300, product_theorems},
        {7, "realization search", 1800, realization},
        {8, "Petersen graph", 30, petersen},
        {9, "product distances against BFS", 60, distances},
        {10, "boundary structure suite, connected order <= 6", 600, boundary_suite},
    };

    bool all_ok = true;
    for (const auto& cr : criteria) {
        if (only && cr.id != only) continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check(secs <= cr.budget_s, "over the time budget of " + std::to_string(static_cast<int>(cr.budget_s)) + " s");
        all_ok = all_ok && check.ok();
        std::cout << "criterion " << cr.id << "  " << (check.ok() ? "PASS" : "FAIL") << "  " << std::fixed
                  << std::setprecision(2) << secs << " s  " << cr.title << "  (" << check.summary() << ")\n";
    }
    return all_ok ? 0 : 1;
}
