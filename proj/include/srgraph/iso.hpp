#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "srgraph/graph.hpp"

namespace srgraph {

/// Isomorphism-invariant fingerprint. `code` is the upper-triangle adjacency
/// under the canonical ordering, so two forms are equal exactly when the
/// graphs are isomorphic. `labeling[v]` is the canonical position of v.
struct CanonicalForm {
    std::size_t order = 0;
    std::vector<std::uint64_t> code;
    std::vector<std::size_t> degree_multiset;  // sorted ascending
    std::size_t triangles = 0;
    std::vector<Vertex> labeling;

    /// Compact printable key (order plus hex code).
    std::string key() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.order == b.order && a.code == b.code;
    }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.code <=> b.code;
    }
};

constexpr std::size_t kIsoOrderCap = 64;

CanonicalForm canonical_form(const Graph& g);

/// Relabel vertex v of g as perm[v]; labels travel with their vertices.
Graph permute(const Graph& g, const std::vector<Vertex>& perm);

struct IsoResult {
    bool isomorphic = false;
    /// mapping[v] is the image in H of vertex v of G.
    std::optional<std::vector<Vertex>> mapping;
};

IsoResult isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);
/// Same vertex count, bijective, adjacency and non-adjacency preserved.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping);

/// E(g) is a subset of E(h) once vertices are matched by label. Both graphs
/// must carry the same label set.
bool is_spanning_subgraph(const Graph& g, const Graph& h);

}  // namespace srgraph
