#include "srgraph/products.hpp"

#include <string>

namespace srgraph {

std::string_view to_string(ProductKind kind) noexcept {
    switch (kind) {
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Direct: return "direct";
        case ProductKind::Strong: return "strong";
        case ProductKind::Lexicographic: return "lexicographic";
        case ProductKind::CartesianSum: return "cartesian-sum";
        case ProductKind::Corona: return "corona";
    }
    return "unknown";
}

ProductKind parse_product_kind(std::string_view text) {
    if (text == "cartesian" || text == "cart") return ProductKind::Cartesian;
    if (text == "direct" || text == "dir" || text == "tensor") return ProductKind::Direct;
    if (text == "strong") return ProductKind::Strong;
    if (text == "lexicographic" || text == "lex") return ProductKind::Lexicographic;
    if (text == "cartesian-sum" || text == "sum") return ProductKind::CartesianSum;
    if (text == "corona") return ProductKind::Corona;
    throw GraphError(ErrorCode::InvalidParameter, "unknown product kind '" + std::string(text) + "'");
}

Vertex pair_index(const Graph& h, Vertex a, Vertex b) { return static_cast<Vertex>(a * h.order() + b); }

namespace {

bool pair_adjacent(ProductKind kind, const Graph& g, const Graph& h, Vertex a, Vertex b, Vertex c, Vertex d) {
    const bool ga = a != c && g.adjacent(a, c);
    const bool hb = b != d && h.adjacent(b, d);
    switch (kind) {
        case ProductKind::Cartesian: return (a == c && hb) || (ga && b == d);
        case ProductKind::Direct: return ga && hb;
        case ProductKind::Strong: return (a == c && hb) || (ga && b == d) || (ga && hb);
        case ProductKind::Lexicographic: return ga || (a == c && hb);
        case ProductKind::CartesianSum: return ga || hb;
        case ProductKind::Corona: break;
    }
    return false;
}

Graph corona(const Graph& g, const Graph& h) {
    const auto n = g.order(), m = h.order();
    GraphBuilder b(n + n * m);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back(g.name(v));
    for (Vertex i = 0; i < n; ++i) {
        const auto base = static_cast<Vertex>(n + i * m);
        for (Vertex x = 0; x < m; ++x) {
            b.add_edge(i, base + x);
            labels.push_back("(" + std::to_string(i) + "," + h.name(x) + ")");
        }
        for (auto [x, y] : h.edges()) b.add_edge(base + x, base + y);
    }
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

void check_vertex(const Graph& p, Vertex x) {
    if (x >= p.order()) throw GraphError(ErrorCode::UnknownVertex, "product vertex " + std::to_string(x));
}

}  // namespace

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw GraphError(ErrorCode::EmptyOperand, "product factors need vertices");
    if (kind == ProductKind::Corona) return corona(g, h);
    const auto n = g.order(), m = h.order();
    GraphBuilder b(n * m);
    std::vector<std::string> labels;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex x = 0; x < m; ++x) labels.push_back("(" + g.name(a) + "," + h.name(x) + ")");
    for (Vertex a = 0; a < n; ++a)
        for (Vertex x = 0; x < m; ++x)
            for (Vertex c = a; c < n; ++c)
                for (Vertex y = (c == a ? x + 1 : 0); y < m; ++y)
                    if (pair_adjacent(kind, g, h, a, x, c, y)) b.add_edge(pair_index(h, a, x), pair_index(h, c, y));
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

EvenOddDistances even_odd_distances(const Graph& g) {
    const auto n = g.order();
    GraphBuilder cover(2 * n);
    for (auto [u, v] : g.edges()) {
        cover.add_edge(u, static_cast<Vertex>(n + v));
        cover.add_edge(static_cast<Vertex>(n + u), v);
    }
    auto dc = all_pairs_distances(std::move(cover).build());
    EvenOddDistances out{DistanceMatrix(n), DistanceMatrix(n)};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            out.even.set(u, v, dc.at(u, v));
            out.odd.set(u, v, dc.at(u, static_cast<Vertex>(n + v)));
        }
    return out;
}

Distance product_distance(ProductKind kind, const Graph& g, const Graph& h, Vertex x, Vertex y) {
    if (g.order() == 0 || h.order() == 0) throw GraphError(ErrorCode::EmptyOperand, "product factors need vertices");
    const auto n = g.order(), m = h.order();
    if (kind == ProductKind::CartesianSum) {
        auto p = product(kind, g, h);
        check_vertex(p, x);
        check_vertex(p, y);
        return bfs_distances(p, x)[y];
    }
    auto dg = all_pairs_distances(g);
    auto dh = all_pairs_distances(h);
    if (kind == ProductKind::Corona) {
        if (x >= n + n * m || y >= n + n * m) throw GraphError(ErrorCode::UnknownVertex, "corona vertex out of range");
        auto base_of = [&](Vertex v) { return v < n ? v : static_cast<Vertex>((v - n) / m); };
        const bool xb = x < n, yb = y < n;
        const auto i = base_of(x), j = base_of(y);
        if (xb && yb) return dg.at(x, y);
        if (xb != yb) return dg.at(i, j) + Distance(1);
        if (i != j) return dg.at(i, j) + Distance(2);
        return min(dh.at((x - n) % m, (y - n) % m), Distance(2));
    }
    if (x >= n * m || y >= n * m) throw GraphError(ErrorCode::UnknownVertex, "product vertex out of range");
    const Vertex a = x / m, b = x % m, c = y / m, d = y % m;
    switch (kind) {
        case ProductKind::Cartesian: return dg.at(a, c) + dh.at(b, d);
        case ProductKind::Strong: return max(dg.at(a, c), dh.at(b, d));
        case ProductKind::Direct: {
            if (x == y) return Distance(0);
            if (g.degree(a) == 0 || h.degree(b) == 0 || g.degree(c) == 0 || h.degree(d) == 0)
                return Distance::infinity();
            auto eg = even_odd_distances(g), eh = even_odd_distances(h);
            return min(max(eg.even.at(a, c), eh.even.at(b, d)), max(eg.odd.at(a, c), eh.odd.at(b, d)));
        }
        case ProductKind::Lexicographic: {
            if (a != c) return dg.at(a, c);
            if (g.degree(a) == 0) return dh.at(b, d);
            return min(dh.at(b, d), Distance(2));
        }
        default: break;
    }
    throw GraphError(ErrorCode::InvalidParameter, "unhandled product kind");
}

bool direct_is_connected(const Graph& g, const Graph& h) {
    if (g.order() < 2 || h.order() < 2) throw GraphError(ErrorCode::TrivialOperand, "direct connectivity needs nontrivial factors");
    return is_connected(g) && is_connected(h) && (!is_bipartite(g) || !is_bipartite(h));
}

}  // namespace srgraph
