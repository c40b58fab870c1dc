#pragma once

#include <cstdint>
#include <string_view>

#include "srgraph/graph.hpp"

namespace srgraph {

enum class CoverMethod { BruteForce, BranchAndBound };
enum class DimsRoute { Oracle, ViaSrg };

std::string_view to_string(CoverMethod m) noexcept;
std::string_view to_string(DimsRoute r) noexcept;

struct CoverResult {
    std::size_t size = 0;
    VertexSet witness;
    CoverMethod method = CoverMethod::BranchAndBound;
};

struct DimsResult {
    std::size_t dimension = 0;
    VertexSet basis;
    DimsRoute route = DimsRoute::Oracle;
};

constexpr std::size_t kOracleOrderCap = 14;
constexpr std::size_t kCoverOrderCap = 64;
constexpr std::size_t kBruteCoverOrderCap = 24;

/// w lies on a shortest u-v extension: d(w,u) = d(w,v)+d(v,u) or d(w,v) = d(w,u)+d(u,v).
bool strongly_resolves(const Graph& g, Vertex w, Vertex u, Vertex v);
bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v);
bool is_strong_generator(const Graph& g, const VertexSet& s);

/// Definition-level search over vertex subsets by increasing size. The basis
/// is the lexicographically least minimum generator.
DimsResult dims_oracle(const Graph& g);

/// Exact minimum vertex cover with the lexicographically least minimum witness.
CoverResult vertex_cover_number(const Graph& g, CoverMethod method = CoverMethod::BranchAndBound);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Maximum clique of the complement by colour-bounded branching.
std::size_t independence_number(const Graph& g);
bool is_independent_set(const Graph& g, const VertexSet& s);

/// Minimum vertex cover of srg(g), lifted back to V(g).
DimsResult dims_via_srg(const Graph& g);

}  // namespace srgraph
