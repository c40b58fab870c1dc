#pragma once

#include <vector>

#include "srgraph/graph.hpp"

namespace srgraph {

/// Per-vertex maximally-distant sets and the symmetric MMD relation derived
/// from them. M_G(v) never contains v itself.
struct MmdRelation {
    std::vector<VertexSet> maximally_distant;
    std::vector<VertexSet> partners;

    std::size_t order() const noexcept { return partners.size(); }
    bool mmd(Vertex u, Vertex v) const noexcept { return partners[u].contains(v); }
    /// MMD pairs (u < v) in lexicographic order.
    std::vector<Edge> pairs() const;
};

struct BoundaryView {
    VertexSet boundary;
    VertexSet tf_boundary;
};

/// {u != v : no neighbour of u is farther from v than u is}.
VertexSet maximally_distant_from(const Graph& g, Vertex v);
MmdRelation mmd_relation(const Graph& g);
BoundaryView boundary(const Graph& g);
/// Vertices maximally distant from at least one other vertex. Equal to
/// boundary(g).boundary on every connected graph; kept separate so the two
/// characterisations can be compared.
VertexSet maximal_distance_boundary(const Graph& g);

/// Graph on the boundary vertices whose edges are the MMD pairs. Vertices
/// keep their original relative order; every vertex is named after its
/// source vertex (g.name).
Graph srg(const Graph& g);
/// Same edges as srg(g) on all of V(g); non-boundary vertices are isolated.
Graph srg_plus_i(const Graph& g);
/// Edge iff distance >= 2 (infinite included) or true twins.
Graph g_star(const Graph& g);
/// g_star with its isolated vertices removed.
Graph g_star_minus(const Graph& g);
/// MMD pairs that are not true twins, on the TF-boundary. Needs a connected,
/// noncomplete graph.
Graph srs(const Graph& g);
/// No MMD pair sits at distance exactly two.
bool is_2mmf(const Graph& g);

/// Throws Disconnected unless g is connected.
void require_connected(const Graph& g, const char* what);

}  // namespace srgraph
