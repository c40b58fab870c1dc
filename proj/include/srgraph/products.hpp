#pragma once

#include <string_view>

#include "srgraph/graph.hpp"

namespace srgraph {

enum class ProductKind { Cartesian, Direct, Strong, Lexicographic, CartesianSum, Corona };

std::string_view to_string(ProductKind kind) noexcept;
/// Accepts cartesian, direct, strong, lexicographic, cartesian-sum, corona
/// (and the short forms cart, dir, lex, sum).
ProductKind parse_product_kind(std::string_view text);

/// Vertex (a,b) of the four standard products and the Cartesian sum sits at
/// index a*|H|+b and is labeled "(name_G(a),name_H(b))". The corona keeps
/// G's vertices first (with G's names), followed by copy i of H at indices
/// |G| + i*|H| + b, labeled "(i,name_H(b))".
Graph product(ProductKind kind, const Graph& g, const Graph& h);

Vertex pair_index(const Graph& h, Vertex a, Vertex b);

struct EvenOddDistances {
    DistanceMatrix even;
    DistanceMatrix odd;
};

/// Shortest even and odd walks, read off BFS on the parity double cover.
EvenOddDistances even_odd_distances(const Graph& g);

/// Distance between vertices x and y of product(kind, g, h), evaluated from
/// factor distances only. The Cartesian sum has no factor formula and falls
/// back to BFS on the built product.
Distance product_distance(ProductKind kind, const Graph& g, const Graph& h, Vertex x, Vertex y);

/// Connectivity of g x h from the factors: both connected and one nonbipartite.
bool direct_is_connected(const Graph& g, const Graph& h);

}  // namespace srgraph
