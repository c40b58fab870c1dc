#include "srgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace srgraph {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::MissingLabels: return "MissingLabels";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::CompleteInput: return "CompleteInput";
        case ErrorCode::EmptyOperand: return "EmptyOperand";
        case ErrorCode::TrivialOperand: return "TrivialOperand";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::UnsupportedLongForm: return "UnsupportedLongForm";
        case ErrorCode::GridTooLarge: return "GridTooLarge";
        case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw GraphError(ErrorCode::OrderTooLarge, "mask sets hold at most 64 vertices");
    VertexSet s(n);
    if (n > 0) s.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void VertexSet::insert(Vertex v) {
    if (v >= n_) throw GraphError(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(n_));
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v < n_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o) return false;
    }
    return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < r.words_.size() && i < other.words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < r.words_.size() && i < other.words_.size(); ++i) r.words_[i] &= ~other.words_[i];
    return r;
}

// ---------------------------------------------------------------------------
// GraphBuilder / Graph

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), stride_(std::max<std::size_t>(1, words_for(n))), adj_(n * stride_, 0) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
        throw GraphError(ErrorCode::IndexOutOfRange,
                         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on order " + std::to_string(n_));
    if (u == v) throw GraphError(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    adj_[u * stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
    adj_[v * stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
    return *this;
}

GraphBuilder& GraphBuilder::set_labels(std::vector<std::string> labels) {
    if (!labels.empty()) {
        if (labels.size() != n_)
            throw GraphError(ErrorCode::InvalidParameter,
                             "expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw GraphError(ErrorCode::DuplicateLabel, "label '" + l + "' repeated");
    }
    labels_ = std::move(labels);
    return *this;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy = *this;
    return std::move(copy).build();
}

Graph GraphBuilder::build() && {
    Graph g;
    g.n_ = n_;
    g.stride_ = stride_;
    g.adj_ = std::move(adj_);
    g.labels_ = std::move(labels_);
    std::size_t twice = 0;
    for (auto w : g.adj_) twice += static_cast<std::size_t>(std::popcount(w));
    g.m_ = twice / 2;
    return g;
}

std::size_t Graph::degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet s(n_);
    for (Vertex u = 0; u < n_; ++u)
        if (adjacent(v, u)) s.insert(u);
    return s;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
    auto s = neighbors(v);
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::string Graph::name(Vertex v) const { return has_labels() ? labels_[v] : std::to_string(v); }

std::optional<Vertex> Graph::find(const std::string& label) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

Graph Graph::induced(const VertexSet& keep) const {
    auto kept = keep.members();
    GraphBuilder b(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (adjacent(kept[i], kept[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    if (has_labels()) {
        std::vector<std::string> ls;
        for (auto v : kept) ls.push_back(labels_[v]);
        b.set_labels(std::move(ls));
    }
    return std::move(b).build();
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    GraphBuilder b(n_);
    for (auto [u, v] : edges()) b.add_edge(u, v);
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

Graph Graph::with_index_labels() const {
    if (has_labels()) return *this;
    std::vector<std::string> ls;
    for (Vertex v = 0; v < n_; ++v) ls.push_back(std::to_string(v));
    return with_labels(std::move(ls));
}

Graph Graph::without_labels() const {
    Graph g = *this;
    g.labels_.clear();
    return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels));
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    b.set_labels(g.labels());
    return std::move(b).build();
}

Graph overlay(const Graph& g, const Graph& h) {
    if ((g.order() > 0 && !g.has_labels()) || (h.order() > 0 && !h.has_labels()))
        throw GraphError(ErrorCode::MissingLabels, "overlay identifies vertices by label");
    std::vector<std::string> labels = g.labels();
    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
    std::vector<Vertex> h_to(h.order());
    for (Vertex v = 0; v < h.order(); ++v) {
        auto [it, fresh] = index.emplace(h.labels()[v], static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(h.labels()[v]);
        h_to[v] = it->second;
    }
    GraphBuilder b(labels.size());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(h_to[u], h_to[v]);
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto n = g.order();
    GraphBuilder b(n + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(static_cast<Vertex>(n + u), static_cast<Vertex>(n + v));
    if (g.has_labels() && h.has_labels()) {
        auto ls = g.labels();
        ls.insert(ls.end(), h.labels().begin(), h.labels().end());
        std::set<std::string> uniq(ls.begin(), ls.end());
        if (uniq.size() == ls.size()) b.set_labels(std::move(ls));
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// distances

std::uint32_t Distance::value() const {
    if (!finite_) throw std::logic_error("value() of an infinite distance");
    return value_;
}

std::string Distance::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

Distance min(Distance a, Distance b) { return a < b ? a : b; }
Distance max(Distance a, Distance b) { return a < b ? b : a; }

Distance DistanceMatrix::diameter() const {
    Distance d(0);
    for (const auto& c : cells_) d = max(d, c);
    return d;
}

Distance DistanceMatrix::eccentricity(Vertex v) const {
    Distance d(0);
    for (Vertex u = 0; u < n_; ++u) d = max(d, at(v, u));
    return d;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    std::vector<Distance> dist(g.order(), Distance::infinity());
    std::vector<Vertex> frontier{source};
    dist[source] = Distance(0);
    std::uint32_t layer = 0;
    while (!frontier.empty()) {
        ++layer;
        std::vector<Vertex> next;
        for (auto u : frontier)
            for (Vertex w = 0; w < g.order(); ++w)
                if (g.adjacent(u, w) && !dist[w].is_finite()) {
                    dist[w] = Distance(layer);
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix d(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < g.order(); ++t) d.set(s, t, row[t]);
    }
    return d;
}

// ---------------------------------------------------------------------------
// structure

bool is_simplicial(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v).members();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    return u != v && g.closed_neighbors(u) == g.closed_neighbors(v);
}

bool are_false_twins(const Graph& g, Vertex u, Vertex v) { return u != v && g.neighbors(u) == g.neighbors(v); }

bool is_true_twin_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (are_true_twins(g, u, v)) return false;
    return true;
}

bool is_false_twin_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (are_false_twins(g, u, v)) return false;
    return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w = 0; w < g.order(); ++w)
                if (g.adjacent(members[i], w) && comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::size_t component_count(const Graph& g) { return components(g).size(); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

VertexSet cut_vertices(const Graph& g) {
    VertexSet cuts(g.order());
    const auto base = component_count(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        auto keep = VertexSet::full(g.order());
        keep.erase(v);
        if (component_count(g.induced(keep)) > base) cuts.insert(v);
    }
    return cuts;
}

VertexClasses classify_vertices(const Graph& g) {
    VertexClasses c{VertexSet(g.order()), {}, cut_vertices(g), VertexSet(g.order())};
    std::vector<bool> placed(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (is_simplicial(g, v)) c.simplicial.insert(v);
        if (g.degree(v) == 1) c.leaves.insert(v);
        if (placed[v]) continue;
        std::vector<Vertex> cls{v};
        placed[v] = true;
        for (Vertex u = v + 1; u < g.order(); ++u)
            if (!placed[u] && are_true_twins(g, v, u)) {
                cls.push_back(u);
                placed[u] = true;
            }
        c.true_twin_classes.push_back(std::move(cls));
    }
    return c;
}

bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() == 0 ? 0 : g.order() - 1); }

bool is_edgeless(const Graph& g) { return g.size() == 0; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (Vertex w = 0; w < g.order(); ++w) {
                if (!g.adjacent(u, w)) continue;
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

VertexSet triangle_vertices(const Graph& g) {
    VertexSet t(g.order());
    for (auto [u, v] : g.edges())
        for (Vertex w = 0; w < g.order(); ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) {
                t.insert(u);
                t.insert(v);
                t.insert(w);
            }
    return t;
}

bool is_triangle_free(const Graph& g) { return triangle_vertices(g).empty(); }

std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_2_antipodal(const Graph& g) {
    if (g.order() < 2) return false;
    auto d = all_pairs_distances(g);
    auto diam = d.diameter();
    if (!diam.is_finite()) return false;
    for (Vertex x = 0; x < g.order(); ++x) {
        std::size_t partners = 0;
        for (Vertex y = 0; y < g.order(); ++y)
            if (d.at(x, y) == diam) ++partners;
        if (partners != 1) return false;
    }
    return true;
}

namespace {

// Marks every vertex pair that lies on a common simple 5-cycle.
void mark_five_cycles(const Graph& g, std::vector<std::vector<bool>>& together) {
    const auto n = g.order();
    std::vector<Vertex> path;
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, Vertex start) -> void {
        if (path.size() == 5) {
            if (g.adjacent(path.back(), start))
                for (auto a : path)
                    for (auto b : path) together[a][b] = true;
            return;
        }
        for (Vertex w = start + 1; w < n; ++w) {
            if (used[w] || !g.adjacent(path.back(), w)) continue;
            used[w] = true;
            path.push_back(w);
            self(self, start);
            path.pop_back();
            used[w] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        used.assign(n, false);
        used[s] = true;
        dfs(dfs, s);
    }
}

}  // namespace

bool is_c5_connected(const Graph& g) {
    const auto n = g.order();
    if (n < 5) return false;
    std::vector<std::vector<bool>> together(n, std::vector<bool>(n, false));
    mark_five_cycles(g, together);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!together[u][v]) return false;
    return true;
}

bool is_hamiltonian(const Graph& g) {
    const auto n = g.order();
    if (n > kHamiltonianOrderCap)
        throw GraphError(ErrorCode::OrderTooLarge, "hamiltonicity is exact only up to order 12");
    if (n < 3) return false;
    // reach[mask] = set of end vertices of paths from vertex 0 covering exactly mask
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::uint32_t> reach(full + 1, 0);
    reach[1] = 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1) || !reach[mask]) continue;
        for (Vertex end = 0; end < n; ++end) {
            if (!((reach[mask] >> end) & 1U)) continue;
            for (Vertex w = 0; w < n; ++w)
                if (!((mask >> w) & 1U) && g.adjacent(end, w)) reach[mask | (std::size_t{1} << w)] |= 1U << w;
        }
    }
    for (Vertex end = 1; end < n; ++end)
        if (((reach[full] >> end) & 1U) && g.adjacent(end, 0)) return true;
    return false;
}

std::size_t bipartite_maximum_matching(const Graph& g) {
    const auto n = g.order();
    if (n > kMatchingOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "matching check is capped at order 200");
    auto side = bipartition(g);
    if (!side) throw GraphError(ErrorCode::NotBipartite, "perfect matching check needs a bipartite graph");
    std::vector<int> mate(n, -1);
    std::size_t matched = 0;
    for (Vertex s = 0; s < n; ++s) {
        if ((*side)[s] != 0) continue;
        std::vector<bool> seen(n, false);
        auto augment = [&](auto&& self, Vertex u) -> bool {
            for (Vertex w = 0; w < n; ++w) {
                if (!g.adjacent(u, w) || seen[w]) continue;
                seen[w] = true;
                if (mate[w] < 0 || self(self, static_cast<Vertex>(mate[w]))) {
                    mate[w] = static_cast<int>(u);
                    return true;
                }
            }
            return false;
        };
        if (augment(augment, s)) ++matched;
    }
    return matched;
}

bool has_bipartite_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) {
        if (!is_bipartite(g)) throw GraphError(ErrorCode::NotBipartite, "perfect matching check needs a bipartite graph");
        return false;
    }
    return bipartite_maximum_matching(g) * 2 == g.order();
}

StructurePredicates structure_predicates(const Graph& g) {
    StructurePredicates p;
    p.connected = is_connected(g);
    p.bipartite = is_bipartite(g);
    p.triangle_free = is_triangle_free(g);
    p.two_antipodal = is_2_antipodal(g);
    p.c5_connected = is_c5_connected(g);
    if (p.bipartite && g.order() <= kMatchingOrderCap) p.bipartite_perfect_matching = has_bipartite_perfect_matching(g);
    if (g.order() <= kHamiltonianOrderCap) p.hamiltonian = is_hamiltonian(g);
    return p;
}

}  // namespace srgraph
