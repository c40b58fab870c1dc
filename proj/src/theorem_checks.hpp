#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srgraph/graph.hpp"
#include "srgraph/verify.hpp"

namespace srgraph::detail {

struct Outcome {
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

using CheckFn = Outcome (*)(const std::vector<Graph>&);

enum class Sweep { None, ConnectedLabeled, AllLabeled };

struct TheoremDef {
    std::string_view id;
    std::string_view anchor;
    std::size_t arity;
    Sweep sweep;
    /// Order of the largest graph the check builds, for the product cap.
    std::size_t (*built_order)(const std::vector<Graph>&);
    CheckFn check;
};

std::span<const TheoremDef> theorem_table();

}  // namespace srgraph::detail
