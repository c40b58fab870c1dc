#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srgraph/graph.hpp"

namespace srgraph {

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct Empty { std::size_t n; };
/// K_{1,leaves}; centre is vertex 0.
struct Star { std::size_t leaves; };
struct CompleteBipartite { std::size_t r, t; };
struct CompleteMultipartite { std::vector<std::size_t> parts; };
struct Hypercube { std::size_t k; };
struct Hamming { std::size_t k, n; };
struct Petersen {};
struct TreeFromPruefer { std::vector<std::size_t> sequence; };
/// The r-armed graph with x attached to a0 and c0; labels a0..ar, b0..br, c0..cr, x.
struct FamilyF { std::size_t r; };
/// Path v1..v{n-1} plus the a_i / b_i bridge vertices; labels v*, a*, b*.
struct FamilyFP { std::size_t n; };
/// Odd cycle whose successor of v_i is v_{(i + floor(n/2)) mod n}.
struct CycleStar { std::size_t n; };
/// K_1 + G with the apex appended last and labeled "k1".
struct JoinK1 { std::shared_ptr<const Graph> g; };
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Empty, family::Star,
                                family::CompleteBipartite, family::CompleteMultipartite, family::Hypercube,
                                family::Hamming, family::Petersen, family::TreeFromPruefer, family::FamilyF,
                                family::FamilyFP, family::CycleStar, family::JoinK1>;

Graph make(const FamilySpec& spec);
Graph join_k1(const Graph& g);

/// Named drawings used as fixtures: fig1g, fig2, fig5, fig6g, fig6h, h7, paw.
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Text grammar: P5, C7, K4, N3, S3, K2,3, K1,2,2 (multipartite), Q3, H2,3,
/// petersen, pruefer:0,0,1, F4, FP9, C7*, K1+<spec>, co:<spec>, g6:<string>,
/// or a fixture name.
Graph graph_from_spec(std::string_view text);

/// Labeled graphs of order n enumerated by edge mask. Bit k of the mask is
/// the k-th pair of the column-major upper triangle (0,1),(0,2),(1,2),(0,3),...
struct EnumerationOptions {
    bool connected_only = false;
    /// Keep one representative per isomorphism class (first mask wins).
    bool deduplicate = false;
    std::uint64_t first_mask = 0;
    /// Exclusive; 0 means "all masks".
    std::uint64_t end_mask = 0;
};

constexpr std::size_t kEnumerationOrderCap = 8;

std::uint64_t mask_count(std::size_t n);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Visits graphs in increasing mask order; the visitor returns false to stop.
/// Returns the number of graphs visited.
std::size_t enumerate_graphs(std::size_t n, const EnumerationOptions& options,
                             const std::function<bool(const Graph&, std::uint64_t mask)>& visit);

/// Connected graphs of order n, one per isomorphism class.
std::vector<Graph> connected_classes(std::size_t n);

}  // namespace srgraph
