#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgraph/graph.hpp"

namespace srgraph {

enum class Verdict { Pass, Fail, Skipped };
std::string_view to_string(Verdict v) noexcept;

struct Counterexample {
    std::string instance;              // grid descriptor, e.g. "C5 ; K3"
    std::vector<std::string> graph6;   // operands, in order
    std::string command;               // CLI line reproducing the failure
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    std::string anchor;
    std::vector<std::string> instances;  // every instance evaluated
    Verdict verdict = Verdict::Skipped;
    std::string reason;                  // skip reason, or failure summary
    double elapsed_ms = 0;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<Counterexample> counterexample;
};

/// Instances for one theorem: explicit operand tuples (graph specs) plus an
/// optional enumeration bound.
struct TheoremGrid {
    std::vector<std::vector<std::string>> instances;
    std::optional<std::size_t> max_order;
};
using GridConfig = std::map<std::string, TheoremGrid, std::less<>>;

/// Sections "[ID]" with keys `instance = A ; B`, `each = A B C`,
/// `square = A B C` and `max_order = N`; '#' comments.
GridConfig parse_grid_config(std::string_view text);
/// The grids shipped in config/theorem_grids.toml, compiled in.
const GridConfig& default_grids();

constexpr std::size_t kVerifyEnumerationCap = 6;
constexpr std::size_t kVerifyProductCap = 60;

struct VerifyOptions {
    /// Enumeration bound for exhaustive theorems; for grid theorems, operands
    /// above this order are left out.
    std::optional<std::size_t> max_order;
    /// Replaces the grid with a single instance (";"-separated graph specs).
    std::optional<std::string> instance;
    const GridConfig* grids = nullptr;
    /// Worker threads for exhaustive sweeps; results do not depend on it.
    std::size_t threads = 1;
};

std::vector<std::string> theorem_ids();
TheoremReport verify_theorem(std::string_view id, const VerifyOptions& options = {});

/// Splits "A ; B" into trimmed specs.
std::vector<std::string> split_instance(std::string_view text);

// ---------------------------------------------------------------------------
// realization search

enum class SearchOutcome { Found, Exhausted, Aborted };
std::string_view to_string(SearchOutcome o) noexcept;

struct SearchOptions {
    std::size_t max_order = 7;
    /// Candidates tried before the enumeration (e.g. known constructions).
    std::vector<Graph> seeds;
    /// Keep scanning the order at which the first realizer appears.
    bool finish_order = false;
    /// Frontier file written while searching; resumed from when it exists
    /// and `resume` is set.
    std::optional<std::string> frontier_path;
    bool resume = false;
    /// Stop (ABORTED) after testing this many new classes; 0 = unlimited.
    std::size_t class_budget = 0;
};

struct RealizationResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::size_t max_order = 0;
    std::vector<Graph> realizers;
    std::size_t classes_tested = 0;
    std::size_t order_reached = 0;
    /// Canonical keys of every class tested at the final frontier.
    std::vector<std::string> tested_keys;
};

constexpr std::size_t kSearchOrderCap = 8;

/// Connected isomorphism classes by increasing order, testing srg(G) ≅ target.
RealizationResult realization_search(const Graph& target, const SearchOptions& options);

}  // namespace srgraph
