#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/resolving.hpp"
#include "srgraph/verify.hpp"

namespace srgraph {

std::string_view to_string(SearchOutcome o) noexcept {
    switch (o) {
        case SearchOutcome::Found: return "FOUND";
        case SearchOutcome::Exhausted: return "EXHAUSTED";
        case SearchOutcome::Aborted: return "ABORTED";
    }
    return "?";
}

namespace {

struct Frontier {
    std::string target;
    std::size_t max_order = 0;
    std::size_t order = 1;
    std::uint64_t cursor = 0;
    std::set<std::string> tested;
    std::vector<std::string> realizers;
};

void save(const Frontier& f, const std::string& path) {
    nlohmann::json j{{"target", f.target},   {"max_order", f.max_order}, {"order", f.order},
                     {"cursor", f.cursor},   {"tested", f.tested},       {"realizers", f.realizers}};
    const auto tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw GraphError(ErrorCode::MalformedInput, "cannot write frontier file " + path);
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

Frontier load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(ErrorCode::MalformedInput, "cannot read frontier file " + path);
    try {
        const auto j = nlohmann::json::parse(in);
        Frontier f;
        f.target = j.at("target").get<std::string>();
        f.max_order = j.at("max_order").get<std::size_t>();
        f.order = j.at("order").get<std::size_t>();
        f.cursor = j.at("cursor").get<std::uint64_t>();
        f.tested = j.at("tested").get<std::set<std::string>>();
        f.realizers = j.value("realizers", std::vector<std::string>{});
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(ErrorCode::MalformedInput, "frontier file " + path + ": " + e.what());
    }
}

bool realizes(const Graph& g, const Graph& target) {
    if (!is_connected(g)) return false;
    const auto s = srg(g);
    return s.order() == target.order() && s.size() == target.size() && are_isomorphic(s, target);
}

}  // namespace

RealizationResult realization_search(const Graph& target, const SearchOptions& options) {
    if (options.max_order > kSearchOrderCap)
        throw GraphError(ErrorCode::OrderTooLarge, "realization search is capped at order " +
                                                       std::to_string(kSearchOrderCap));
    RealizationResult result;
    result.max_order = options.max_order;

    for (const auto& seed : options.seeds)
        if (realizes(seed, target)) {
            result.outcome = SearchOutcome::Found;
            result.realizers.push_back(seed);
            result.order_reached = seed.order();
            return result;
        }

    Frontier f;
    f.target = emit_graph6(target);
    f.max_order = options.max_order;
    if (options.resume && options.frontier_path && std::filesystem::exists(*options.frontier_path)) {
        f = load(*options.frontier_path);
        if (f.target != emit_graph6(target))
            throw GraphError(ErrorCode::InvalidParameter, "frontier belongs to target " + f.target);
        f.max_order = options.max_order;
        for (const auto& g6 : f.realizers) result.realizers.push_back(parse_graph6(g6));
    }
    auto checkpoint = [&] {
        if (options.frontier_path) save(f, *options.frontier_path);
    };
    auto finish = [&](SearchOutcome outcome) {
        result.outcome = outcome;
        result.classes_tested = f.tested.size();
        result.tested_keys.assign(f.tested.begin(), f.tested.end());
        checkpoint();
        return result;
    };

    // A realizer found in an earlier run ends the search at its order.
    if (!result.realizers.empty() && (!options.finish_order || f.order > result.realizers.front().order())) {
        result.order_reached = result.realizers.front().order();
        return finish(SearchOutcome::Found);
    }

    std::size_t fresh = 0;
    bool aborted = false;
    for (; f.order <= options.max_order; ++f.order, f.cursor = 0) {
        result.order_reached = f.order;
        EnumerationOptions eo;
        eo.connected_only = true;
        eo.deduplicate = true;
        eo.first_mask = f.cursor;
        enumerate_graphs(f.order, eo, [&](const Graph& g, std::uint64_t mask) {
            if (options.class_budget && fresh == options.class_budget) {
                aborted = true;
                return false;
            }
            f.cursor = mask + 1;
            if (!f.tested.insert(canonical_form(g).key()).second) return true;
            ++fresh;
            if (realizes(g, target)) {
                result.realizers.push_back(g);
                f.realizers.push_back(emit_graph6(g));
                if (!options.finish_order) return false;
            }
            if (fresh % 256 == 0) checkpoint();
            return true;
        });
        if (aborted) return finish(SearchOutcome::Aborted);
        if (!result.realizers.empty()) {
            if (options.finish_order) f.cursor = mask_count(f.order);
            return finish(SearchOutcome::Found);
        }
    }
    f.order = options.max_order + 1;
    return finish(SearchOutcome::Exhausted);
}

}  // namespace srgraph
