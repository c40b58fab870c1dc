#include "theorem_checks.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/products.hpp"
#include "srgraph/resolving.hpp"
#include "srgraph/strong_dimension.hpp"

namespace srgraph::detail {
namespace {

Outcome pass() { return {Verdict::Pass, {}}; }
Outcome fail(std::string detail) { return {Verdict::Fail, std::move(detail)}; }
Outcome skip(std::string reason) { return {Verdict::Skipped, std::move(reason)}; }

std::string shape(const Graph& g) {
    std::string s = "order " + std::to_string(g.order()) + ", size " + std::to_string(g.size());
    if (g.order() <= kGraph6OrderCap) s += ", g6 " + emit_graph6(g);
    return s;
}

Outcome expect_iso(const Graph& computed, const Graph& claimed, std::string_view what) {
    if (are_isomorphic(computed, claimed)) return pass();
    return fail(std::string(what) + ": computed (" + shape(computed) + ") is not isomorphic to claimed (" +
                shape(claimed) + ")");
}

Outcome expect_eq(std::size_t computed, std::size_t claimed, std::string_view what) {
    if (computed == claimed) return pass();
    return fail(std::string(what) + ": computed " + std::to_string(computed) + ", claimed " + std::to_string(claimed));
}

Outcome expect(bool holds, std::string_view what) { return holds ? pass() : fail(std::string(what)); }

/// First non-passing outcome of a sequence of checks, else PASS.
template <typename... Fs>
Outcome all_of(Fs&&... checks) {
    Outcome result = pass();
    auto step = [&](auto&& f) {
        if (result.verdict != Verdict::Pass) return;
        result = f();
    };
    (step(checks), ...);
    return result;
}

Graph edgeless_like(const Graph& g) { return build_graph(g.order(), std::span<const Edge>{}, g.labels()); }

Graph copies(const Graph& h, std::size_t k) {
    Graph acc;
    for (std::size_t i = 0; i < k; ++i) acc = disjoint_union(acc, h);
    return acc;
}

Graph complete_graph(std::size_t n) { return make(family::Complete{n}); }

std::size_t leaf_count(const Graph& g) {
    std::size_t leaves = 0;
    for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
    return leaves;
}

bool has_isolated(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() + 1 == g.order(); }
bool is_path_graph(const Graph& g) { return is_tree(g) && max_degree(g) <= 2; }

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_odd_cycle(const Graph& g) { return is_cycle_graph(g) && g.order() % 2 == 1; }

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    auto sides = bipartition(g);
    if (!sides) return std::nullopt;
    const auto r = static_cast<std::size_t>(std::count(sides->begin(), sides->end(), 0));
    const auto t = g.order() - r;
    if (g.size() != r * t) return std::nullopt;
    return std::pair{std::min(r, t), std::max(r, t)};
}

/// Part sizes when g is complete multipartite with at least two parts.
std::optional<std::vector<std::size_t>> multipartite_parts(const Graph& g) {
    const auto c = complement(g);
    const auto comps = components(c);
    if (comps.size() < 2) return std::nullopt;
    std::vector<std::size_t> parts;
    for (const auto& comp : comps) {
        VertexSet keep(g.order());
        for (auto v : comp) keep.insert(v);
        if (!is_complete(c.induced(keep))) return std::nullopt;
        parts.push_back(comp.size());
    }
    return parts;
}

/// Vertices of a cycle graph in cyclic order, starting at 0 towards its smaller neighbour.
std::vector<Vertex> cyclic_order(const Graph& c) {
    std::vector<Vertex> order{0};
    Vertex prev = 0, cur = c.neighbors(0).members().front();
    while (cur != 0) {
        order.push_back(cur);
        auto nb = c.neighbors(cur).members();
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

/// Graph on the vertices (and labels) of g with the given edges only.
Graph spanning(const Graph& g, const std::vector<Edge>& edges) { return build_graph(g.order(), edges, g.labels()); }

bool perfect_matching(const Graph& g) {
    const auto n = g.order();
    if (n % 2) return false;
    if (n == 0) return true;
    if (n > 64) throw GraphError(ErrorCode::OrderTooLarge, "matching search is capped at order 64");
    std::unordered_set<std::uint64_t> dead;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto rec = [&](auto&& self, std::uint64_t free) -> bool {
        if (free == 0) return true;
        if (dead.contains(free)) return false;
        const auto v = static_cast<Vertex>(std::countr_zero(free));
        for (auto cand = g.row_mask(v) & free; cand; cand &= cand - 1) {
            const auto u = std::countr_zero(cand);
            if (self(self, free & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u))) return true;
        }
        dead.insert(free);
        return false;
    };
    return rec(rec, all);
}

bool bipartite_with_perfect_matching(const Graph& g) { return is_bipartite(g) && has_bipartite_perfect_matching(g); }

std::size_t dimension_of(const Graph& g) { return dims_oracle(g).dimension; }

// ---------------------------------------------------------------------------
// single-graph results

Outcome check_t3(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    return expect_eq(dimension_of(g), vertex_cover_number(srg_plus_i(g)).size, "dims vs beta(G_SR+I)");
}

Outcome check_t4(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    return expect_eq(dimension_of(g), vertex_cover_number(srg(g)).size, "dims vs beta(G_SR)");
}

Outcome check_t5(const std::vector<Graph>& in) {
    const auto& g = in[0];
    return expect_eq(independence_number(g) + vertex_cover_number(g).size, g.order(), "alpha + beta vs n");
}

Outcome check_obs1(const std::vector<Graph>& in) {
    const auto& g = in[0];
    const auto n = g.order();
    if (n < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const auto d = dimension_of(g);
    Outcome o = all_of([&] { return expect_eq(dims_via_srg(g).dimension, d, "route agreement"); },
                       [&] { return expect((d == 1) == is_path_graph(g), "dims = 1 exactly on paths"); },
                       [&] { return expect((d == n - 1) == is_complete(g), "dims = n-1 exactly on complete graphs"); });
    if (o.verdict != Verdict::Pass) return o;
    if (is_tree(g)) o = expect_eq(d, leaf_count(g) - 1, "tree: leaves - 1");
    if (o.verdict == Verdict::Pass && is_cycle_graph(g)) o = expect_eq(d, (n + 1) / 2, "cycle: ceil(n/2)");
    if (auto rt = complete_bipartite_sides(g); o.verdict == Verdict::Pass && rt && rt->first + rt->second >= 3)
        o = expect_eq(d, rt->first + rt->second - 2, "K_{r,t}: r + t - 2");
    return o;
}

Outcome check_obs2(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const auto s = srg(g);
    const auto bv = boundary(g);
    bool applied = false;
    Outcome o = pass();
    auto rule = [&](bool applies, auto claimed, std::string_view what) {
        if (!applies || o.verdict != Verdict::Pass) return;
        applied = true;
        o = expect_iso(s, claimed(), what);
    };
    rule(bv.boundary == classify_vertices(g).simplicial, [&] { return complete_graph(bv.boundary.size()); },
         "boundary = simplicial: K_|boundary|");
    rule(is_tree(g), [&] { return complete_graph(leaf_count(g)); }, "tree: K_leaves");
    rule(is_2_antipodal(g), [&] { return copies(complete_graph(2), g.order() / 2); }, "2-antipodal: (n/2) K_2");
    rule(is_odd_cycle(g), [&] { return g; }, "odd cycle: fixed point");
    auto parts = multipartite_parts(g);
    const bool fat = parts && std::ranges::all_of(*parts, [](std::size_t p) { return p >= 2; });
    rule(fat,
         [&] {
             Graph acc;
             for (auto p : *parts) acc = disjoint_union(acc, complete_graph(p));
             return acc;
         },
         "complete multipartite: union of K_{p_i}");
    if (!applied) return skip("no catalogued form applies");
    return o;
}

Outcome check_r1(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    const auto b = boundary(g).boundary;
    return all_of([&] { return expect(maximal_distance_boundary(g) == b, "boundary characterisations differ"); },
                  [&] {
                      return expect(g.order() < 2 || classify_vertices(g).simplicial.is_subset_of(b),
                                    "a simplicial vertex lies outside the boundary");
                  });
}

Outcome check_r2(const std::vector<Graph>& in) {
    const auto& g = in[0];
    const auto n = g.order();
    if (!is_connected(g) || n < 2) return skip("needs a connected graph of order >= 2");
    if (n > 16) return skip("minimum generator enumeration is capped at order 16");
    const auto k = dimension_of(g);
    const auto pairs = mmd_relation(g).pairs();
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::size_t bases = 0;
    while (s < limit) {
        const auto set = VertexSet::from_mask(n, s);
        if (is_strong_generator(g, set)) {
            ++bases;
            for (auto [x, y] : pairs)
                if (!set.contains(x) && !set.contains(y))
                    return fail("minimum generator misses MMD pair " + g.name(x) + "," + g.name(y));
        }
        if (k == 0) break;
        const auto c = s & (~s + 1);  // next subset of the same size
        const auto r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return expect(bases > 0, "no minimum generator found");
}

Outcome check_l6(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const auto d = all_pairs_distances(g);
    const auto b = boundary(g).boundary.members();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            bool extended = false;
            for (auto a : b) {
                for (auto c : b)
                    if (d.at(a, c) == d.at(a, u) + d.at(u, v) + d.at(v, c)) {
                        extended = true;
                        break;
                    }
                if (extended) break;
            }
            if (!extended) return fail("no boundary extension of a shortest " + g.name(u) + "-" + g.name(v) + " path");
        }
    return pass();
}

Outcome check_l7(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    const auto b = boundary(g).boundary;
    const auto rel = mmd_relation(g);
    const auto sigma = classify_vertices(g).simplicial;
    bool any = false;
    for (auto v : (b - sigma).members()) {
        any = true;
        std::size_t free = 0;
        for (auto a : b.members()) free += a != v && !rel.mmd(v, a);
        if (free < 2) return fail("boundary vertex " + g.name(v) + " has fewer than two boundary non-partners");
    }
    return any ? pass() : skip("every boundary vertex is simplicial");
}

Outcome check_t8(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const bool equal = boundary(g).boundary == classify_vertices(g).simplicial;
    return expect(is_complete(srg(g)) == equal, "G_SR complete disagrees with boundary = simplicial");
}

Outcome check_l9(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    return expect((cut_vertices(g) & boundary(g).boundary).empty(), "a cut vertex lies in the boundary");
}

Outcome check_p10(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const auto cuts = cut_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 1 && !cuts.contains(v)) return skip("a vertex of degree > 1 is not a cut vertex");
    return expect_iso(srg(g), complete_graph(leaf_count(g)), "G_SR vs K_leaves");
}

Outcome check_p11(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    if (all_pairs_distances(g).diameter() != Distance(2)) return skip("diameter is not 2");
    return expect_iso(srg(g), g_star_minus(g), "G_SR vs G*_-");
}

Outcome check_t12(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const bool lhs = are_isomorphic(srg(g), complement(g));
    const bool rhs = all_pairs_distances(g).diameter() == Distance(2) && is_true_twin_free(g);
    return expect(lhs == rhs, lhs ? "G_SR is the complement but the diameter/twin condition fails"
                                  : "diameter 2 and true-twin-free, yet G_SR is not the complement");
}

Outcome check_p13(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (g.order() < 2 || !is_connected(g)) return skip("needs a connected graph of order >= 2");
    const auto s = srg(g);
    if (auto rt = complete_bipartite_sides(s)) {
        if (rt->first == 1 && rt->second >= 2) return fail("G_SR is a star K_{1," + std::to_string(rt->second) + "}");
        if (rt->first == 2) return fail("G_SR is K_{2," + std::to_string(rt->second) + "}");
    }
    return expect(are_isomorphic(s, complete_graph(2)) == is_path_graph(g), "G_SR = K_2 exactly on paths fails");
}

Outcome check_realizes(const std::vector<Graph>& in) {
    if (!is_connected(in[0])) return skip("disconnected");
    return expect_iso(srg(in[0]), in[1], "G_SR vs target");
}

Outcome check_c17(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!is_connected(g)) return skip("disconnected");
    if (all_pairs_distances(g).diameter() < Distance(4)) return skip("diameter below 4");
    if (!is_false_twin_free(g)) return skip("has false twins");
    const auto c = complement(g);
    return all_of([&] { return expect(is_true_twin_free(c), "complement has true twins"); },
                  [&] { return expect(all_pairs_distances(c).diameter() == Distance(2), "complement diameter is not 2"); },
                  [&] { return expect_iso(srg(c), g, "SR graph of the complement vs G"); });
}

// ---------------------------------------------------------------------------
// products

bool nontrivial(const Graph& g) { return g.order() >= 2; }
bool connected_nontrivial(const Graph& g) { return nontrivial(g) && is_connected(g); }

Outcome check_p19(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!nontrivial(g) || !nontrivial(h)) return skip("needs nontrivial factors");
    if (is_complete(g) && is_complete(h)) return skip("both factors complete");
    const auto diam = all_pairs_distances(product(ProductKind::CartesianSum, g, h)).diameter();
    const auto dg = all_pairs_distances(g).diameter(), dh = all_pairs_distances(h).diameter();
    const bool iso_g = has_isolated(g), iso_h = has_isolated(h);
    bool applied = false;
    Outcome o = pass();
    auto claim = [&](bool applies, Distance expected, std::string_view what) {
        if (!applies || o.verdict != Verdict::Pass) return;
        applied = true;
        if (diam != expected)
            o = fail(std::string(what) + ": diameter " + diam.to_string() + ", claimed " + expected.to_string());
    };
    claim(is_edgeless(h), max(Distance(2), dg), "(i) H empty");
    claim(iso_g && iso_h, Distance::infinity(), "(ii) both with isolated vertices");
    claim(!iso_g && !iso_h, Distance(2), "(iii) no isolated vertices");
    claim(dh <= Distance(2), Distance(2), "(iv) D(H) <= 2");
    claim(Distance(2) < dh && !iso_h && !is_edgeless(g) && iso_g, Distance(3), "(v) D(H) > 2");
    return applied ? o : skip("no case applies");
}

Outcome check_p35(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!nontrivial(g) || !nontrivial(h)) return skip("needs nontrivial factors");
    if (is_complete(g) && is_complete(h)) return skip("both factors complete");
    if (!(all_pairs_distances(g).diameter() <= Distance(2) || (!has_isolated(g) && !has_isolated(h))))
        return skip("D(G) > 2 and a factor has isolated vertices");
    const auto p = product(ProductKind::CartesianSum, g, h);
    if (!is_connected(p)) return fail("Cartesian sum is disconnected");
    return expect_iso(srg(p), g_star_minus(p), "(G+H)_SR vs (G+H)*_-");
}

Outcome check_eq3(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!is_connected(g)) return skip("G disconnected");
    const auto p = product(ProductKind::Corona, g, h);
    const auto d = all_pairs_distances(p);
    for (Vertex x = 0; x < p.order(); ++x)
        for (Vertex y = 0; y < p.order(); ++y) {
            const auto f = product_distance(ProductKind::Corona, g, h, x, y);
            if (f != d.at(x, y))
                return fail("d(" + p.name(x) + "," + p.name(y) + "): formula " + f.to_string() + ", BFS " +
                            d.at(x, y).to_string());
        }
    return pass();
}

Outcome check_t20(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !connected_nontrivial(h)) return skip("needs connected nontrivial factors");
    return expect_iso(srg(product(ProductKind::Cartesian, g, h)), product(ProductKind::Direct, srg(g), srg(h)),
                      "(G[]H)_SR vs G_SR x H_SR");
}

Outcome matching_conclusion(const Graph& g, const Graph& h) {
    const auto s = srg(product(ProductKind::Cartesian, g, h));
    return expect(bipartite_with_perfect_matching(s), "(G[]H)_SR is not bipartite with a perfect matching");
}

Outcome check_t21(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !connected_nontrivial(h)) return skip("needs connected nontrivial factors");
    if (!bipartite_with_perfect_matching(srg(h))) return skip("H_SR is not bipartite with a perfect matching");
    const auto sg = srg(g);
    for (const auto& comp : components(sg)) {
        VertexSet keep(sg.order());
        for (auto v : comp) keep.insert(v);
        const auto c = sg.induced(keep);
        if (perfect_matching(c)) continue;
        if (c.order() > kHamiltonianOrderCap) return skip("component of G_SR too large for the Hamiltonicity test");
        if (!is_hamiltonian(c)) return skip("a component of G_SR is neither Hamiltonian nor perfectly matchable");
    }
    return matching_conclusion(g, h);
}

Outcome check_c23(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !connected_nontrivial(h)) return skip("needs connected nontrivial factors");
    if (!is_2_antipodal(g)) return skip("G is not 2-antipodal");
    if (!is_2_antipodal(h) && boundary(h).boundary != classify_vertices(h).simplicial)
        return skip("H is neither 2-antipodal nor boundary = simplicial");
    return matching_conclusion(g, h);
}

Outcome check_l24(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !connected_nontrivial(h)) return skip("needs connected nontrivial factors");
    const bool lhs = are_isomorphic(product(ProductKind::Cartesian, g, h), product(ProductKind::Direct, g, h));
    const bool rhs = is_odd_cycle(g) && are_isomorphic(g, h);
    return expect(lhs == rhs, lhs ? "G[]H = GxH without both factors the same odd cycle"
                                  : "same odd cycle, yet G[]H and GxH differ");
}

Outcome check_r25(const std::vector<Graph>& in) {
    const auto& c = in[0];
    if (!is_odd_cycle(c)) return skip("not an odd cycle");
    const auto p = product(ProductKind::Direct, c, c);
    return expect_iso(srg(p), p, "(C x C)_SR vs C x C");
}

Outcome check_t27(const std::vector<Graph>& in) {
    const auto &g = in[0], &k = in[1];
    if (g.order() < 3 || !is_connected(g) || !is_2mmf(g)) return skip("G is not a connected 2MMF graph of order >= 3");
    if (!is_complete(k) || k.order() < 3) return skip("second factor is not K_n with n >= 3");
    const auto nk = edgeless_like(k);
    auto claimed = product(ProductKind::Cartesian, g, nk);
    if (!is_complete(g)) claimed = overlay(claimed, product(ProductKind::Lexicographic, srg(g), nk));
    const auto w = triangle_vertices(g);
    if (!w.empty()) claimed = overlay(claimed, product(ProductKind::Cartesian, edgeless_like(g.induced(w)), k));
    return expect_iso(srg(product(ProductKind::Direct, g, k)), claimed, "(G x K_n)_SR vs overlay of the pieces");
}

bool complete_at_least(const Graph& g, std::size_t n) { return g.order() >= n && is_complete(g); }

Outcome check_c28(const std::vector<Graph>& in) {
    if (!complete_at_least(in[0], 3) || !complete_at_least(in[1], 3)) return skip("needs K_r, K_t with r,t >= 3");
    return expect_iso(srg(product(ProductKind::Direct, in[0], in[1])), product(ProductKind::Cartesian, in[0], in[1]),
                      "(K_r x K_t)_SR vs K_r [] K_t");
}

Outcome check_c29(const std::vector<Graph>& in) {
    if (!complete_at_least(in[0], 3) || !complete_at_least(in[1], 3)) return skip("needs K_r, K_t with r,t >= 3");
    const auto p = product(ProductKind::Direct, in[0], in[1]);
    return expect_iso(srg(srg(p)), p, "((K_r x K_t)_SR)_SR vs K_r x K_t");
}

Outcome check_p30(const std::vector<Graph>& in) {
    const auto &c = in[0], &k = in[1];
    const auto r = c.order(), t = k.order();
    if (!is_cycle_graph(c) || r < 4) return skip("first factor is not C_r with r >= 4");
    if (!complete_at_least(k, 3)) return skip("second factor is not K_t with t >= 3");
    const auto s = srg(product(ProductKind::Direct, c, k));
    if (r <= 5) return expect_iso(s, copies(complete_graph(r), t), "(i) union of t copies of K_r");
    const auto u = cyclic_order(c);
    const auto nt = edgeless_like(k);
    // even r: the antipodal chords u_i u_{i+r/2}; odd r: the edges of C_r^*
    std::vector<Edge> chords;
    for (std::size_t i = 0; i < (r % 2 == 0 ? r / 2 : r); ++i) chords.emplace_back(u[i], u[(i + r / 2) % r]);
    const auto claimed = overlay(product(ProductKind::Cartesian, c, nt),
                                 product(ProductKind::Lexicographic, spanning(c, chords), nt));
    return expect_iso(s, claimed, r % 2 == 0 ? "(ii) even r" : "(iii) odd r");
}

Outcome check_p31(const std::vector<Graph>& in) {
    const auto &p = in[0], &k = in[1];
    const auto r = p.order(), t = k.order();
    if (!is_path_graph(p) || r < 2) return skip("first factor is not P_r with r >= 2");
    if (!complete_at_least(k, 3)) return skip("second factor is not K_t with t >= 3");
    const auto s = srg(product(ProductKind::Direct, p, k));
    if (r <= 3) return expect_iso(s, copies(complete_graph(r), t), "union of t copies of K_r");
    std::vector<Vertex> ends;
    for (Vertex v = 0; v < r; ++v)
        if (p.degree(v) == 1) ends.push_back(v);
    const auto nt = edgeless_like(k);
    const auto claimed = overlay(product(ProductKind::Cartesian, p, nt),
                                 product(ProductKind::Lexicographic, spanning(p, {{ends[0], ends[1]}}), nt));
    return expect_iso(s, claimed, "(P_r [] N_t) + (P_2 o N_t)");
}

Outcome check_r32(const std::vector<Graph>& in) {
    const auto rt = complete_bipartite_sides(in[0]);
    if (!rt) return skip("first factor is not complete bipartite");
    if (!complete_at_least(in[1], 3)) return skip("second factor is not K_n with n >= 3");
    return expect_iso(srg(product(ProductKind::Direct, in[0], in[1])),
                      copies(complete_graph(rt->first + rt->second), in[1].order()), "union of n copies of K_{r+t}");
}

bool odd_girth_family(const Graph& g) { return !is_bipartite(g) && is_triangle_free(g) && is_c5_connected(g); }

Outcome check_t33(const std::vector<Graph>& in) {
    const auto &g = in[0], &b = in[1];
    if (!nontrivial(g) || !odd_girth_family(g)) return skip("G is not nonbipartite, triangle-free and C5-connected");
    const auto kl = complete_bipartite_sides(b);
    if (!kl || kl->second < 2) return skip("second factor is not K_{k,l} with max{k,l} >= 2");
    return expect_iso(srg(product(ProductKind::Direct, g, b)),
                      product(ProductKind::Cartesian, make(family::Empty{g.order()}), complete_graph(b.order())),
                      "(G x K_{k,l})_SR vs N_n [] K_{k+l}");
}

Outcome check_t34(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    for (const auto* f : {&g, &h}) {
        if (!odd_girth_family(*f)) return skip("a factor is not nonbipartite, triangle-free and C5-connected");
        if (all_pairs_distances(*f).diameter() != Distance(2)) return skip("a factor has diameter other than 2");
    }
    return expect_iso(srg(product(ProductKind::Direct, g, h)), product(ProductKind::Cartesian, g, h),
                      "(G x H)_SR vs G [] H");
}

Outcome check_l36(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !connected_nontrivial(h)) return skip("needs connected nontrivial factors");
    const auto rg = mmd_relation(g), rh = mmd_relation(h), rp = mmd_relation(product(ProductKind::Strong, g, h));
    const auto dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            for (Vertex x = 0; x < g.order(); ++x)
                for (Vertex y = 0; y < h.order(); ++y) {
                    const auto a = pair_index(h, u, v), b = pair_index(h, x, y);
                    if (a == b) continue;
                    const bool mg = rg.mmd(u, x), mh = rh.mmd(v, y);
                    const bool cases = (mg && mh) || (mg && v == y) || (mh && u == x) ||
                                       (mg && dg.at(u, x) > dh.at(v, y)) || (mh && dg.at(u, x) < dh.at(v, y));
                    if (cases != rp.mmd(a, b))
                        return fail("pair (" + g.name(u) + "," + h.name(v) + ")-(" + g.name(x) + "," + h.name(y) +
                                    "): MMD " + (rp.mmd(a, b) ? "holds" : "fails") + " but the case list says " +
                                    (cases ? "MMD" : "not MMD"));
                }
    return pass();
}

Outcome check_t37(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!is_connected(g) || !is_connected(h)) return skip("needs connected factors");
    const auto gi = srg_plus_i(g), hi = srg_plus_i(h);
    const auto lower = product(ProductKind::Strong, gi, hi);
    const auto middle = srg_plus_i(product(ProductKind::Strong, g, h));
    const auto upper = product(ProductKind::CartesianSum, gi, hi);
    return all_of([&] { return expect(is_spanning_subgraph(lower, middle), "lower sandwich bound fails"); },
                  [&] { return expect(is_spanning_subgraph(middle, upper), "upper sandwich bound fails"); });
}

Outcome check_t38(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !nontrivial(h)) return skip("needs G connected nontrivial and H nontrivial");
    const auto p = product(ProductKind::Lexicographic, g, h);
    const auto dp = all_pairs_distances(p), dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
            for (Vertex c = 0; c < g.order(); ++c)
                for (Vertex d = 0; d < h.order(); ++d) {
                    const auto x = pair_index(h, a, b), y = pair_index(h, c, d);
                    const bool adj = (a == c && h.adjacent(b, d)) || g.adjacent(a, c);
                    if (adj != p.adjacent(x, y)) return fail("neighbourhood of " + p.name(x) + " differs at " + p.name(y));
                    if (x == y) continue;
                    const auto claimed = a != c ? dg.at(a, c) : min(dh.at(b, d), Distance(2));
                    if (claimed != dp.at(x, y))
                        return fail("d(" + p.name(x) + "," + p.name(y) + "): BFS " + dp.at(x, y).to_string() +
                                    ", formula " + claimed.to_string());
                }
    return pass();
}

template <typename Pred>
Outcome lex_mmd_scan(const Graph& g, const Graph& h, Pred&& expected_for) {
    const auto rp = mmd_relation(product(ProductKind::Lexicographic, g, h));
    bool any = false;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < g.order(); ++b)
            for (Vertex x = 0; x < h.order(); ++x)
                for (Vertex y = 0; y < h.order(); ++y) {
                    auto want = expected_for(a, b, x, y);
                    if (!want) continue;
                    any = true;
                    const auto p = pair_index(h, a, x), q = pair_index(h, b, y);
                    if (rp.mmd(p, q) != *want)
                        return fail("(" + g.name(a) + "," + h.name(x) + ") and (" + g.name(b) + "," + h.name(y) +
                                    "): MMD " + (rp.mmd(p, q) ? "holds" : "fails") + ", claimed " +
                                    (*want ? "MMD" : "not MMD"));
                }
    return any ? pass() : skip("no vertex pair meets the hypothesis");
}

Outcome check_l39(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !nontrivial(h)) return skip("needs G connected nontrivial and H nontrivial");
    const auto rg = mmd_relation(g);
    return lex_mmd_scan(g, h, [&](Vertex a, Vertex b, Vertex, Vertex) -> std::optional<bool> {
        if (a == b || are_true_twins(g, a, b)) return std::nullopt;
        return rg.mmd(a, b);
    });
}

Outcome check_l40(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || !nontrivial(h)) return skip("needs G connected nontrivial and H of order >= 2");
    const auto full = h.order() - 1;
    return lex_mmd_scan(g, h, [&](Vertex a, Vertex b, Vertex x, Vertex y) -> std::optional<bool> {
        if (a == b || !are_true_twins(g, a, b)) return std::nullopt;
        return h.degree(x) == full && h.degree(y) == full;
    });
}

Outcome check_l41b(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g)) return skip("needs G connected nontrivial");
    const auto hs = g_star(h);
    return lex_mmd_scan(g, h, [&](Vertex a, Vertex b, Vertex x, Vertex y) -> std::optional<bool> {
        if (a != b || x == y) return std::nullopt;
        return hs.adjacent(x, y);
    });
}

Outcome check_r41(const std::vector<Graph>& in) {
    const auto& g = in[0];
    if (!connected_nontrivial(g)) return skip("needs a connected nontrivial graph");
    bool applied = false;
    Outcome o = pass();
    auto rule = [&](bool applies, auto body) {
        if (!applies || o.verdict != Verdict::Pass) return;
        applied = true;
        o = body();
    };
    rule(max_degree(g) + 2 <= g.order(), [&] { return expect_iso(g_star(g), srg(join_k1(g)), "(i) G* vs (K_1+G)_SR"); });
    rule(all_pairs_distances(g).diameter() <= Distance(2),
         [&] { return expect_iso(g_star_minus(g), srg(g), "(ii) G*_- vs G_SR"); });
    rule(is_true_twin_free(g), [&] { return expect_iso(g_star(g), complement(g), "(iii) G* vs complement"); });
    return applied ? o : skip("no case applies");
}

Graph lex(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) return Graph{};
    return product(ProductKind::Lexicographic, g, h);
}

Outcome check_p42(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g)) return skip("G is not connected of order >= 2");
    if (!is_true_twin_free(g)) return skip("G has true twins");
    if (!nontrivial(h) || is_complete(h)) return skip("H is complete or trivial");
    const auto hs = g_star(h);
    const auto claimed =
        disjoint_union(lex(srg(g), hs), copies(g_star_minus(h), g.order() - boundary(g).boundary.size()));
    return expect_iso(srg(product(ProductKind::Lexicographic, g, h)), claimed, "(G o H)_SR vs (G_SR o H*) + H*_-'s");
}

Outcome check_p43(const std::vector<Graph>& in) {
    const auto &g = in[0], &k = in[1];
    if (!connected_nontrivial(g)) return skip("G is not connected of order >= 2");
    if (!complete_at_least(k, 2)) return skip("H is not K_n' with n' >= 2");
    const auto claimed = disjoint_union(lex(srg(g), k), copies(k, g.order() - boundary(g).boundary.size()));
    return expect_iso(srg(product(ProductKind::Lexicographic, g, k)), claimed, "(G o K)_SR vs (G_SR o K) + K's");
}

bool small_max_degree(const Graph& h) { return nontrivial(h) && max_degree(h) + 2 <= h.order(); }

Outcome check_p44(const std::vector<Graph>& in) {
    const auto &k = in[0], &h = in[1];
    if (!complete_at_least(k, 2)) return skip("G is not K_n with n >= 2");
    if (!small_max_degree(h)) return skip("H has a dominating vertex or is trivial");
    return expect_iso(srg(product(ProductKind::Lexicographic, k, h)), copies(g_star(h), k.order()),
                      "(K_n o H)_SR vs n copies of H*");
}

Outcome check_p45(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || is_complete(g)) return skip("G is not connected noncomplete of order >= 2");
    if (!small_max_degree(h)) return skip("H has a dominating vertex or is trivial");
    const auto hs = g_star(h);
    const auto claimed = disjoint_union(lex(srs(g), hs), copies(hs, g.order() - boundary(g).tf_boundary.size()));
    return expect_iso(srg(product(ProductKind::Lexicographic, g, h)), claimed, "(G o H)_SR vs (G_SRS o H*) + H*'s");
}

Outcome check_cor_sr(const std::vector<Graph>& in) {
    const auto &g = in[0], &h = in[1];
    if (!connected_nontrivial(g) || h.order() == 0) return skip("needs G connected of order >= 2");
    const bool lhs = is_complete(srg(product(ProductKind::Corona, g, h)));
    return expect(lhs == (is_complete(h) || is_edgeless(h)),
                  lhs ? "SR graph complete although H is neither complete nor empty"
                      : "H complete or empty, yet the SR graph is not complete");
}

Outcome check_srs_ex(const std::vector<Graph>& in) {
    const auto &g = in[0], &k = in[1];
    if (!connected_nontrivial(g)) return skip("G is not connected of order >= 2");
    if (!complete_at_least(k, 2)) return skip("H is not K_n' with n' >= 2");
    const auto p = product(ProductKind::Corona, g, k);
    const auto bv = boundary(p);
    return all_of([&] { return expect(bv.tf_boundary == bv.boundary, "TF-boundary differs from the boundary"); },
                  [&] { return expect_iso(srg(p), complete_graph(g.order() * k.order()), "SR graph vs K_{nn'}"); },
                  [&] {
                      return expect_iso(srs(p),
                                        make(family::CompleteMultipartite{std::vector<std::size_t>(g.order(), k.order())}),
                                        "SRS graph vs complete n-partite");
                  });
}

// ---------------------------------------------------------------------------

std::size_t own_order(const std::vector<Graph>& in) { return in[0].order(); }
std::size_t square_order(const std::vector<Graph>& in) { return in[0].order() * in[0].order(); }
std::size_t pair_order(const std::vector<Graph>& in) { return in[0].order() * in[1].order(); }
std::size_t corona_order(const std::vector<Graph>& in) { return in[0].order() * (1 + in[1].order()); }
std::size_t realize_order(const std::vector<Graph>& in) { return std::max(in[0].order(), in[1].order()); }

constexpr auto kOne = Sweep::ConnectedLabeled;
constexpr auto kNone = Sweep::None;

const TheoremDef kTable[] = {
    {"T3", "dims(G) = beta(G_SR+I)", 1, kOne, own_order, check_t3},
    {"T4", "dims(G) = beta(G_SR)", 1, kOne, own_order, check_t4},
    {"T5", "alpha(G) + beta(G) = n", 1, Sweep::AllLabeled, own_order, check_t5},
    {"OBS1", "dims: 1 iff P_n; n-1 iff K_n; C_n -> ceil(n/2); tree -> l(T)-1; K_{r,t} -> r+t-2", 1, kOne, own_order,
     check_obs1},
    {"OBS2", "G_SR: K_|d| if d = sigma; (n/2)K_2 if 2-antipodal; C_{2k+1} fixed; union K_{p_i}", 1, kOne, own_order,
     check_obs2},
    {"R1", "boundary = {u : u maximally distant from some v}; sigma within boundary", 1, kOne, own_order, check_r1},
    {"R2", "every MMD pair {x,y} meets every strong metric basis", 1, kOne, own_order, check_r2},
    {"L6", "shortest paths extend to geodesics between boundary vertices", 1, kOne, own_order, check_l6},
    {"L7", "v in boundary minus sigma has two boundary non-partners", 1, kOne, own_order, check_l7},
    {"T8", "G_SR complete <=> boundary = sigma", 1, kOne, own_order, check_t8},
    {"L9", "cut vertices lie outside the boundary", 1, kOne, own_order, check_l9},
    {"P10", "all degree>1 vertices are cut vertices => G_SR = K_eps", 1, kOne, own_order, check_p10},
    {"P11", "D(G) = 2 => G_SR = G*_-", 1, kOne, own_order, check_p11},
    {"T12", "G_SR = complement(G) <=> D(G) = 2 and true-twin-free", 1, kOne, own_order, check_t12},
    {"P13", "G_SR = K_{1,r} <=> G = P_n, r = 1; G_SR = K_{2,r} impossible", 1, kOne, own_order, check_p13},
    {"P15", "G_SR = P_n realized (K_1+P_4, F_P)", 2, kNone, realize_order, check_realizes},
    {"P16", "G_SR = C_n realized (complement of C_n)", 2, kNone, realize_order, check_realizes},
    {"C17", "false-twin-free, D >= 4 => G = (complement G)_SR, complement true-twin-free of diameter 2", 1, kOne,
     own_order, check_c17},
    {"P19", "D(G (+) H) in {max(2,D(G)), inf, 2, 3} by case", 2, kNone, pair_order, check_p19},
    {"EQ3", "corona distance: min{d_H(x,y),2} inside a copy, else through the base", 2, kNone, corona_order, check_eq3},
    {"T20", "(G [] H)_SR = G_SR x H_SR", 2, kNone, pair_order, check_t20},
    {"T21", "(G [] H)_SR bipartite with a perfect matching", 2, kNone, pair_order, check_t21},
    {"C23", "2-antipodal factors => (G [] H)_SR bipartite with a perfect matching", 2, kNone, pair_order, check_c23},
    {"L24", "G [] H = G x H <=> G = H = C_{2k+1}", 2, kNone, pair_order, check_l24},
    {"R25", "(C_{2k+1} x C_{2k+1})_SR = C_{2k+1} x C_{2k+1}", 1, kNone, square_order, check_r25},
    {"T27", "(G x K_n)_SR = (G [] N_n) + (G_SR o N_n) + (N_W [] K_n)", 2, kNone, pair_order, check_t27},
    {"C28", "(K_r x K_t)_SR = K_r [] K_t", 2, kNone, pair_order, check_c28},
    {"C29", "((K_r x K_t)_SR)_SR = K_r x K_t", 2, kNone, pair_order, check_c29},
    {"P30", "(C_r x K_t)_SR by r: t K_r; antipodal chords; C_r^* chords", 2, kNone, pair_order, check_p30},
    {"P31", "(P_r x K_t)_SR = (P_r [] N_t) + (P_2 o N_t)", 2, kNone, pair_order, check_p31},
    {"R32", "(K_{r,t} x K_n)_SR = n K_{r+t}", 2, kNone, pair_order, check_r32},
    {"T33", "(G x K_{k,l})_SR = N_n [] K_{k+l}", 2, kNone, pair_order, check_t33},
    {"T34", "(G x H)_SR = G [] H", 2, kNone, pair_order, check_t34},
    {"P35", "(G (+) H)_SR = (G (+) H)*_-", 2, kNone, pair_order, check_p35},
    {"L36", "strong product MMD pairs: five cases", 2, kNone, pair_order, check_l36},
    {"T37", "G_SR+I [x] H_SR+I <= (G [x] H)_SR+I <= G_SR+I (+) H_SR+I", 2, kNone, pair_order, check_t37},
    {"T38", "lexicographic distance: d_G(a,c) if a != c, else min{d_H(b,d),2}", 2, kNone, pair_order, check_t38},
    {"L39", "non-twins a,b: (a,x),(b,y) MMD <=> a,b MMD", 2, kNone, pair_order, check_l39},
    {"L40", "true twins a,b: (a,x),(b,y) MMD <=> deg x = deg y = n'-1", 2, kNone, pair_order, check_l40},
    {"R41", "G* = (K_1+G)_SR if Delta <= n-2; G*_- = G_SR if D <= 2; G* = complement if twin-free", 1, kNone,
     own_order, check_r41},
    {"L41b", "(a,x),(a,y) MMD <=> xy in E(H*)", 2, kNone, pair_order, check_l41b},
    {"P42", "(G o H)_SR = (G_SR o H*) + (n - |d(G)|) H*_-", 2, kNone, pair_order, check_p42},
    {"P43", "(G o K_n')_SR = (G_SR o K_n') + (n - |d(G)|) K_n'", 2, kNone, pair_order, check_p43},
    {"P44", "(K_n o H)_SR = n H*", 2, kNone, pair_order, check_p44},
    {"P45", "(G o H)_SR = (G_SRS o H*) + (n - |d_TF(G)|) H*", 2, kNone, pair_order, check_p45},
    {"COR-SR", "(G corona H)_SR complete <=> H complete or empty", 2, kNone, corona_order, check_cor_sr},
    {"SRS-EX", "(G corona K_n')_SR = K_{nn'}; SRS = K_{n',...,n'}", 2, kNone, corona_order, check_srs_ex},
};

}  // namespace

std::span<const TheoremDef> theorem_table() { return kTable; }

}  // namespace srgraph::detail
