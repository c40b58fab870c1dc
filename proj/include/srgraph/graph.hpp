#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgraph/error.hpp"

namespace srgraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// A subset of the vertices of some graph of order n, stored as packed bits.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t n);
    static VertexSet from_mask(std::size_t n, std::uint64_t mask);

    std::size_t universe() const noexcept { return n_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const noexcept { return v < n_ && ((words_[v / 64] >> (v % 64)) & 1U); }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in increasing order.
    std::vector<Vertex> members() const;
    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool is_subset_of(const VertexSet& other) const;
    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet operator-(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Finite simple undirected graph on vertices 0..n-1 with optional unique
/// text labels. Immutable once built; equality is on (order, edge set) under
/// the identity map, labels are not compared.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (adj_[u * stride_ + v / 64] >> (v % 64)) & 1U;
    }
    std::span<const std::uint64_t> row(Vertex v) const noexcept {
        return {adj_.data() + v * stride_, stride_};
    }
    /// Neighbourhood as a single word; requires order() <= 64.
    std::uint64_t row_mask(Vertex v) const noexcept { return adj_[v * stride_]; }

    std::size_t degree(Vertex v) const noexcept;
    VertexSet neighbors(Vertex v) const;
    VertexSet closed_neighbors(Vertex v) const;
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of v, or its decimal index when the graph is unlabeled.
    std::string name(Vertex v) const;
    std::optional<Vertex> find(const std::string& label) const;

    /// Subgraph induced by `keep`, vertices renumbered in increasing order, labels kept.
    Graph induced(const VertexSet& keep) const;
    /// Same edges with every vertex labeled (index names are used where missing).
    Graph with_labels(std::vector<std::string> labels) const;
    Graph with_index_labels() const;
    Graph without_labels() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

/// Mutable staging area for a Graph. Rejects loops and out-of-range indices;
/// repeated edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& set_labels(std::vector<std::string> labels);
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (adj_[u * stride_ + v / 64] >> (v % 64)) & 1U;
    }
    Graph build() &&;
    Graph build() const&;

private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {});

Graph complement(const Graph& g);

/// Union of two labeled graphs over the union of their label sets; vertices
/// with equal labels are identified. Result vertices: g's labels in order,
/// then h's labels not present in g.
Graph overlay(const Graph& g, const Graph& h);

/// Disjoint union; labels are kept when both operands carry them and stay unique.
Graph disjoint_union(const Graph& g, const Graph& h);

// ---------------------------------------------------------------------------
// distances

/// Length of a shortest path, or infinity between different components.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t v) : value_(v) {}
    static constexpr Distance infinity() {
        Distance d;
        d.finite_ = false;
        return d;
    }

    constexpr bool is_finite() const noexcept { return finite_; }
    /// Throws std::logic_error on infinity.
    std::uint32_t value() const;

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Distance(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Distance a, Distance b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    std::uint32_t value_ = 0;
    bool finite_ = true;
};

Distance min(Distance a, Distance b);
Distance max(Distance a, Distance b);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * n, Distance::infinity()) {}

    std::size_t order() const noexcept { return n_; }
    Distance at(Vertex u, Vertex v) const noexcept { return cells_[u * n_ + v]; }
    void set(Vertex u, Vertex v, Distance d) noexcept { cells_[u * n_ + v] = d; }

    /// Largest entry; infinity when disconnected, 0 for order <= 1.
    Distance diameter() const;
    Distance eccentricity(Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<Distance> cells_;
};

DistanceMatrix all_pairs_distances(const Graph& g);
/// Per-vertex BFS layer count from `source`.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

// ---------------------------------------------------------------------------
// structure

struct VertexClasses {
    VertexSet simplicial;
    /// Classes of equal closed neighbourhoods, each sorted, ordered by first member.
    /// Singletons are included, so the classes partition V(G).
    std::vector<std::vector<Vertex>> true_twin_classes;
    VertexSet cut_vertices;
    VertexSet leaves;
};

VertexClasses classify_vertices(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);
bool are_true_twins(const Graph& g, Vertex u, Vertex v);
bool are_false_twins(const Graph& g, Vertex u, Vertex v);
bool is_true_twin_free(const Graph& g);
bool is_false_twin_free(const Graph& g);
VertexSet cut_vertices(const Graph& g);
std::size_t component_count(const Graph& g);
/// Vertex lists of the connected components, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
/// Vertices lying on at least one triangle.
VertexSet triangle_vertices(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Every vertex has exactly one partner at distance D(G). Disconnected
/// graphs (D = infinity) are treated as not 2-antipodal; K_1 likewise.
bool is_2_antipodal(const Graph& g);
/// Every pair of distinct vertices lies on a common 5-cycle.
bool is_c5_connected(const Graph& g);
/// Exact, refuses order > 12.
bool is_hamiltonian(const Graph& g);
/// Exact augmenting-path matching; refuses non-bipartite input and order > 200.
bool has_bipartite_perfect_matching(const Graph& g);
/// Maximum matching size of a bipartite graph (same preconditions).
std::size_t bipartite_maximum_matching(const Graph& g);

constexpr std::size_t kHamiltonianOrderCap = 12;
constexpr std::size_t kMatchingOrderCap = 200;

struct StructurePredicates {
    bool connected = false;
    bool bipartite = false;
    bool triangle_free = false;
    bool two_antipodal = false;
    bool c5_connected = false;
    std::optional<bool> bipartite_perfect_matching;  // only for bipartite input
    std::optional<bool> hamiltonian;                 // only for order <= 12
};

StructurePredicates structure_predicates(const Graph& g);

}  // namespace srgraph
