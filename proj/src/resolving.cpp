#include "srgraph/resolving.hpp"

#include <string>

namespace srgraph {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw GraphError(ErrorCode::Disconnected, std::string(what) + " needs a connected graph");
}

std::vector<Edge> MmdRelation::pairs() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = u + 1; v < order(); ++v)
            if (mmd(u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

VertexSet maximally_distant_with(const Graph& g, const DistanceMatrix& d, Vertex v) {
    VertexSet out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        bool maximal = true;
        for (Vertex w = 0; w < g.order() && maximal; ++w)
            if (g.adjacent(u, w) && d.at(v, w) > d.at(v, u)) maximal = false;
        if (maximal) out.insert(u);
    }
    return out;
}

MmdRelation mmd_with(const Graph& g, const DistanceMatrix& d) {
    MmdRelation rel;
    for (Vertex v = 0; v < g.order(); ++v) rel.maximally_distant.push_back(maximally_distant_with(g, d, v));
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet p(g.order());
        for (auto u : rel.maximally_distant[v].members())
            if (rel.maximally_distant[u].contains(v)) p.insert(u);
        rel.partners.push_back(std::move(p));
    }
    return rel;
}

std::vector<std::string> names_of(const Graph& g) {
    std::vector<std::string> out;
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.name(v));
    return out;
}

}  // namespace

VertexSet maximally_distant_from(const Graph& g, Vertex v) {
    require_connected(g, "maximally_distant_from");
    if (v >= g.order()) throw GraphError(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
    return maximally_distant_with(g, all_pairs_distances(g), v);
}

MmdRelation mmd_relation(const Graph& g) {
    require_connected(g, "mmd_relation");
    return mmd_with(g, all_pairs_distances(g));
}

BoundaryView boundary(const Graph& g) {
    auto rel = mmd_relation(g);
    BoundaryView view{VertexSet(g.order()), VertexSet(g.order())};
    for (auto [u, v] : rel.pairs()) {
        view.boundary.insert(u);
        view.boundary.insert(v);
        if (!are_true_twins(g, u, v)) {
            view.tf_boundary.insert(u);
            view.tf_boundary.insert(v);
        }
    }
    return view;
}

VertexSet maximal_distance_boundary(const Graph& g) {
    require_connected(g, "maximal_distance_boundary");
    auto d = all_pairs_distances(g);
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out = out | maximally_distant_with(g, d, v);
    return out;
}

Graph srg_plus_i(const Graph& g) {
    auto rel = mmd_relation(g);
    GraphBuilder b(g.order());
    for (auto [u, v] : rel.pairs()) b.add_edge(u, v);
    b.set_labels(names_of(g));
    return std::move(b).build();
}

Graph srg(const Graph& g) { return srg_plus_i(g).induced(boundary(g).boundary); }

Graph g_star(const Graph& g) {
    auto d = all_pairs_distances(g);
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (d.at(u, v) >= Distance(2) || are_true_twins(g, u, v)) b.add_edge(u, v);
    b.set_labels(names_of(g));
    return std::move(b).build();
}

Graph g_star_minus(const Graph& g) {
    auto star = g_star(g);
    VertexSet keep(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (star.degree(v) > 0) keep.insert(v);
    return star.induced(keep);
}

Graph srs(const Graph& g) {
    require_connected(g, "srs");
    if (is_complete(g)) throw GraphError(ErrorCode::CompleteInput, "srs is defined for noncomplete graphs");
    auto rel = mmd_relation(g);
    GraphBuilder b(g.order());
    VertexSet keep(g.order());
    for (auto [u, v] : rel.pairs()) {
        if (are_true_twins(g, u, v)) continue;
        b.add_edge(u, v);
        keep.insert(u);
        keep.insert(v);
    }
    b.set_labels(names_of(g));
    return std::move(b).build().induced(keep);
}

bool is_2mmf(const Graph& g) {
    require_connected(g, "is_2mmf");
    auto d = all_pairs_distances(g);
    auto rel = mmd_with(g, d);
    for (auto [u, v] : rel.pairs())
        if (d.at(u, v) == Distance(2)) return false;
    return true;
}

}  // namespace srgraph
