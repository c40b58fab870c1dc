#include "srgraph/strong_dimension.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "srgraph/resolving.hpp"

namespace srgraph {

std::string_view to_string(CoverMethod m) noexcept {
    return m == CoverMethod::BruteForce ? "brute_force" : "branch_and_bound";
}

std::string_view to_string(DimsRoute r) noexcept { return r == DimsRoute::Oracle ? "oracle" : "srg"; }

bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
    return d.at(w, u) == d.at(w, v) + d.at(v, u) || d.at(w, v) == d.at(w, u) + d.at(u, v);
}

bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v) {
    require_connected(g, "strongly_resolves");
    for (auto x : {w, u, v})
        if (x >= g.order()) throw GraphError(ErrorCode::UnknownVertex, "vertex " + std::to_string(x));
    if (u == v) throw GraphError(ErrorCode::InvalidParameter, "strong resolution needs two distinct vertices");
    return strongly_resolves(all_pairs_distances(g), w, u, v);
}

bool is_strong_generator(const Graph& g, const VertexSet& s) {
    require_connected(g, "is_strong_generator");
    auto d = all_pairs_distances(g);
    auto members = s.members();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            bool hit = false;
            for (auto w : members)
                if (strongly_resolves(d, w, u, v)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    return true;
}

namespace {

/// Calls visit(mask) for every k-subset of {0..n-1} in lexicographic order of
/// the sorted member lists; stops early when visit returns true.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (auto i : idx) mask |= std::uint64_t{1} << i;
        if (visit(mask)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.row_mask(v);
    return adj;
}

class CoverSearch {
public:
    explicit CoverSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    /// Minimum cover size of the subgraph induced by `alive`.
    std::size_t solve(std::uint64_t alive) {
        best_ = static_cast<std::size_t>(std::popcount(alive));
        branch(alive, 0);
        return best_;
    }

private:
    int degree(Vertex v, std::uint64_t alive) const { return std::popcount(adj_[v] & alive); }

    std::size_t matching_bound(std::uint64_t alive) const {
        std::size_t m = 0;
        std::uint64_t free = alive;
        while (free) {
            auto v = static_cast<Vertex>(std::countr_zero(free));
            free &= free - 1;
            auto nb = adj_[v] & free;
            if (nb) {
                free &= ~(nb & -nb);
                ++m;
            }
        }
        return m;
    }

    // Every vertex of `alive` has degree exactly two: a union of cycles.
    std::size_t cycles_cover(std::uint64_t alive) const {
        std::size_t total = 0;
        while (alive) {
            std::uint64_t comp = alive & -alive;
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                for (auto f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
                next &= alive & ~comp;
                comp |= next;
                frontier = next;
            }
            total += (static_cast<std::size_t>(std::popcount(comp)) + 1) / 2;
            alive &= ~comp;
        }
        return total;
    }

    void branch(std::uint64_t alive, std::size_t taken) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto rest = alive; rest; rest &= rest - 1) {
                auto v = static_cast<Vertex>(std::countr_zero(rest));
                if (!((alive >> v) & 1U)) continue;
                int d = degree(v, alive);
                if (d == 0) {
                    alive &= ~(std::uint64_t{1} << v);
                    changed = true;
                } else if (d == 1) {
                    auto u = static_cast<Vertex>(std::countr_zero(adj_[v] & alive));
                    alive &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
                    ++taken;
                    changed = true;
                }
            }
        }
        if (taken >= best_) return;
        if (!alive) {
            best_ = taken;
            return;
        }
        if (taken + matching_bound(alive) >= best_) return;

        Vertex pick = 0;
        int max_deg = -1;
        for (auto rest = alive; rest; rest &= rest - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(rest));
            int d = degree(v, alive);
            if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        }
        if (max_deg == 2) {
            best_ = std::min(best_, taken + cycles_cover(alive));
            return;
        }
        auto bit = std::uint64_t{1} << pick;
        branch(alive & ~bit, taken + 1);
        auto nb = adj_[pick] & alive;
        branch(alive & ~bit & ~nb, taken + static_cast<std::size_t>(max_deg));
    }

    std::vector<std::uint64_t> adj_;
    std::size_t best_ = 0;
};

bool covers(const std::vector<std::uint64_t>& adj, std::uint64_t cover) {
    for (Vertex v = 0; v < adj.size(); ++v)
        if (!((cover >> v) & 1U) && (adj[v] & ~cover)) return false;
    return true;
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

CoverResult cover_branch_and_bound(const Graph& g) {
    auto adj = adjacency_masks(g);
    CoverSearch search(adj);
    const auto n = g.order();
    const auto beta = search.solve(full_mask(n));

    // Lexicographically least witness: admit each vertex in index order when a
    // minimum cover still exists with it; otherwise its neighbours are forced.
    std::uint64_t fixed_in = 0;
    std::uint64_t alive = full_mask(n);
    for (Vertex v = 0; v < n; ++v) {
        auto bit = std::uint64_t{1} << v;
        if (!(alive & bit)) continue;
        auto rest = alive & ~bit;
        if (static_cast<std::size_t>(std::popcount(fixed_in)) + 1 + search.solve(rest) == beta) {
            fixed_in |= bit;
            alive = rest;
        } else {
            auto nb = adj[v] & alive;
            fixed_in |= nb;
            alive &= ~(bit | nb);
        }
    }
    if (!covers(adj, fixed_in) || static_cast<std::size_t>(std::popcount(fixed_in)) != beta)
        throw std::logic_error("vertex cover witness reconstruction failed");
    return {beta, VertexSet::from_mask(n, fixed_in), CoverMethod::BranchAndBound};
}

CoverResult cover_brute_force(const Graph& g) {
    const auto n = g.order();
    if (n > kBruteCoverOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "brute-force cover is capped at order 24");
    auto adj = adjacency_masks(g);
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t found = 0;
        if (for_each_combination(n, k, [&](std::uint64_t m) {
                if (!covers(adj, m)) return false;
                found = m;
                return true;
            }))
            return {k, VertexSet::from_mask(n, found), CoverMethod::BruteForce};
    }
    throw std::logic_error("unreachable: the full vertex set is a cover");
}

// Maximum clique with greedy colouring bounds.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    std::size_t solve(std::uint64_t candidates) {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

private:
    void expand(std::uint64_t cand, std::size_t size) {
        if (!cand) {
            best_ = std::max(best_, size);
            return;
        }
        // colour classes in order; vertices visited by decreasing colour
        std::vector<Vertex> order;
        std::vector<std::size_t> colour;
        std::uint64_t uncoloured = cand;
        std::size_t c = 0;
        while (uncoloured) {
            ++c;
            std::uint64_t avail = uncoloured;
            while (avail) {
                auto v = static_cast<Vertex>(std::countr_zero(avail));
                avail &= ~(std::uint64_t{1} << v) & ~adj_[v];
                uncoloured &= ~(std::uint64_t{1} << v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + colour[i] <= best_) return;
            auto v = order[i];
            expand(cand & adj_[v], size + 1);
            cand &= ~(std::uint64_t{1} << v);
        }
    }

    std::vector<std::uint64_t> adj_;
    std::size_t best_ = 0;
};

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i], m[j])) return false;
    return true;
}

CoverResult vertex_cover_number(const Graph& g, CoverMethod method) {
    if (g.order() > kCoverOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "vertex cover search is capped at order 64");
    return method == CoverMethod::BruteForce ? cover_brute_force(g) : cover_branch_and_bound(g);
}

std::size_t independence_number(const Graph& g) {
    const auto n = g.order();
    if (n > kCoverOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "independence search is capped at order 64");
    std::vector<std::uint64_t> co(n);
    for (Vertex v = 0; v < n; ++v) co[v] = ~g.row_mask(v) & full_mask(n) & ~(std::uint64_t{1} << v);
    return CliqueSearch(std::move(co)).solve(full_mask(n));
}

DimsResult dims_oracle(const Graph& g) {
    require_connected(g, "dims_oracle");
    const auto n = g.order();
    if (n > kOracleOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "dims_oracle is capped at order 14");
    auto d = all_pairs_distances(g);
    std::vector<std::uint32_t> resolvers;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            std::uint32_t m = 0;
            for (Vertex w = 0; w < n; ++w)
                if (strongly_resolves(d, w, u, v)) m |= 1U << w;
            resolvers.push_back(m);
        }
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t found = 0;
        bool hit = for_each_combination(n, k, [&](std::uint64_t mask) {
            for (auto r : resolvers)
                if (!(r & mask)) return false;
            found = mask;
            return true;
        });
        if (hit) return {k, VertexSet::from_mask(n, found), DimsRoute::Oracle};
    }
    throw std::logic_error("unreachable: V(G) strongly resolves every pair");
}

DimsResult dims_via_srg(const Graph& g) {
    require_connected(g, "dims_via_srg");
    auto border = boundary(g).boundary.members();
    auto sr = srg(g);
    auto cover = vertex_cover_number(sr);
    VertexSet basis(g.order());
    for (auto i : cover.witness.members()) basis.insert(border[i]);
    if (!is_strong_generator(g, basis)) throw std::logic_error("lifted cover is not a strong metric generator");
    return {cover.size, basis, DimsRoute::ViaSrg};
}

}  // namespace srgraph
