#include "srgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "default_grids.hpp"
#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "theorem_checks.hpp"

namespace srgraph {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

const detail::TheoremDef& find_theorem(std::string_view id) {
    for (const auto& def : detail::theorem_table())
        if (def.id == id) return def;
    throw GraphError(ErrorCode::UnknownTheorem, "no theorem with id '" + std::string(id) + "'");
}

Graph labeled(Graph g) { return g.has_labels() ? g : g.with_index_labels(); }

/// Tally for one slice of the work; slices are merged in order.
struct Tally {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::string first_skip;
    std::optional<Counterexample> failure;

    void record(const detail::Outcome& o) {
        if (o.verdict == Verdict::Pass) ++checked;
        else if (o.verdict == Verdict::Skipped) {
            ++skipped;
            if (first_skip.empty()) first_skip = o.detail;
        }
    }
    void merge(Tally&& other) {
        checked += other.checked;
        skipped += other.skipped;
        if (first_skip.empty()) first_skip = std::move(other.first_skip);
        if (!failure) failure = std::move(other.failure);
    }
};

detail::Outcome run_check(const detail::TheoremDef& def, const std::vector<Graph>& operands) {
    try {
        return def.check(operands);
    } catch (const GraphError& e) {
        return {Verdict::Fail, std::string("raised ") + e.what()};
    }
}

std::string repro_command(std::string_view id, const std::string& instance) {
    return "srgtool verify --theorem " + std::string(id) + " --instance \"" + instance + "\"";
}

Counterexample make_counterexample(std::string_view id, const std::string& instance,
                                   const std::vector<Graph>& operands, std::string detail) {
    Counterexample c;
    c.instance = instance;
    for (const auto& g : operands) c.graph6.push_back(emit_graph6(g));
    c.command = repro_command(id, instance);
    c.detail = std::move(detail);
    return c;
}

Tally sweep_slice(const detail::TheoremDef& def, std::size_t n, std::uint64_t first, std::uint64_t end) {
    Tally t;
    EnumerationOptions opts;
    opts.connected_only = def.sweep == detail::Sweep::ConnectedLabeled;
    opts.first_mask = first;
    opts.end_mask = end;
    enumerate_graphs(n, opts, [&](const Graph& g, std::uint64_t) {
        const std::vector<Graph> operands{g};
        auto o = run_check(def, operands);
        if (o.verdict == Verdict::Fail) {
            t.failure = make_counterexample(def.id, "g6:" + emit_graph6(g), operands, std::move(o.detail));
            return false;
        }
        t.record(o);
        return true;
    });
    return t;
}

Tally sweep(const detail::TheoremDef& def, std::size_t max_order, std::size_t threads) {
    Tally total;
    for (std::size_t n = 1; n <= max_order && !total.failure; ++n) {
        const auto masks = mask_count(n);
        const auto workers = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, masks));
        if (workers == 1) {
            total.merge(sweep_slice(def, n, 0, masks));
            continue;
        }
        std::vector<std::future<Tally>> parts;
        for (std::size_t w = 0; w < workers; ++w) {
            const auto lo = masks * w / workers, hi = masks * (w + 1) / workers;
            parts.push_back(std::async(std::launch::async, [&def, n, lo, hi] { return sweep_slice(def, n, lo, hi); }));
        }
        for (auto& p : parts) total.merge(p.get());
    }
    return total;
}

std::string sweep_descriptor(detail::Sweep s, std::size_t max_order) {
    const char* what = s == detail::Sweep::ConnectedLabeled ? "connected labeled graphs" : "labeled graphs";
    return std::string(what) + " of order 1.." + std::to_string(max_order);
}

}  // namespace

std::vector<std::string> split_instance(std::string_view text) {
    std::vector<std::string> parts;
    while (true) {
        const auto cut = text.find(';');
        const auto piece = trim(text.substr(0, cut));
        if (!piece.empty()) parts.emplace_back(piece);
        if (cut == std::string_view::npos) break;
        text.remove_prefix(cut + 1);
    }
    if (parts.empty()) throw GraphError(ErrorCode::InvalidParameter, "empty instance");
    return parts;
}

GridConfig parse_grid_config(std::string_view text) {
    GridConfig config;
    TheoremGrid* current = nullptr;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto where = [&] { return "grid line " + std::to_string(line_no) + ": "; };
        if (line.front() == '[') {
            if (line.back() != ']') throw GraphError(ErrorCode::MalformedInput, where() + "unterminated section");
            current = &config[std::string(trim(line.substr(1, line.size() - 2)))];
            continue;
        }
        const auto eq = line.find('=');
        if (!current || eq == std::string_view::npos)
            throw GraphError(ErrorCode::MalformedInput, where() + "expected key = value inside a section");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "max_order") {
            std::size_t n = 0;
            try {
                n = std::stoul(std::string(value));
            } catch (const std::exception&) {
                throw GraphError(ErrorCode::MalformedInput, where() + "max_order is not a number");
            }
            current->max_order = n;
        } else if (key == "instance") {
            current->instances.push_back(split_instance(value));
        } else if (key == "each") {
            for (auto& w : split_words(value)) current->instances.push_back({w});
        } else if (key == "square") {
            const auto words = split_words(value);
            for (const auto& a : words)
                for (const auto& b : words) current->instances.push_back({a, b});
        } else {
            throw GraphError(ErrorCode::MalformedInput, where() + "unknown key '" + std::string(key) + "'");
        }
    }
    return config;
}

const GridConfig& default_grids() {
    static const GridConfig grids = parse_grid_config(detail::kDefaultGridText);
    return grids;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (const auto& def : detail::theorem_table()) ids.emplace_back(def.id);
    return ids;
}

TheoremReport verify_theorem(std::string_view id, const VerifyOptions& options) {
    const auto& def = find_theorem(id);
    const auto started = std::chrono::steady_clock::now();
    const auto& grids = options.grids ? *options.grids : default_grids();
    const auto it = grids.find(id);
    const TheoremGrid grid = it == grids.end() ? TheoremGrid{} : it->second;

    TheoremReport report;
    report.theorem = std::string(def.id);
    report.anchor = std::string(def.anchor);
    Tally tally;

    std::vector<std::vector<std::string>> tuples = grid.instances;
    std::size_t sweep_bound = 0;
    if (options.instance) {
        tuples = {split_instance(*options.instance)};
    } else if (def.sweep != detail::Sweep::None) {
        sweep_bound = options.max_order.value_or(grid.max_order.value_or(0));
        if (sweep_bound > kVerifyEnumerationCap)
            throw GraphError(ErrorCode::GridTooLarge, "enumeration order " + std::to_string(sweep_bound) +
                                                          " exceeds " + std::to_string(kVerifyEnumerationCap));
    }

    for (const auto& tuple : tuples) {
        if (tuple.size() != def.arity)
            throw GraphError(ErrorCode::InvalidParameter, std::string(def.id) + " takes " + std::to_string(def.arity) +
                                                              " operand(s), got '" + join(tuple, " ; ") + "'");
        std::vector<Graph> operands;
        for (const auto& spec : tuple) operands.push_back(labeled(graph_from_spec(spec)));
        const auto descriptor = join(tuple, " ; ");
        report.instances.push_back(descriptor);
        if (!options.instance && options.max_order &&
            std::ranges::any_of(operands, [&](const Graph& g) { return g.order() > *options.max_order; })) {
            tally.record({Verdict::Skipped, "operand order above --max-order"});
            continue;
        }
        if (def.built_order(operands) > kVerifyProductCap)
            throw GraphError(ErrorCode::GridTooLarge, descriptor + " builds a graph of order " +
                                                          std::to_string(def.built_order(operands)) + " (cap " +
                                                          std::to_string(kVerifyProductCap) + ")");
        auto o = run_check(def, operands);
        if (o.verdict == Verdict::Fail) {
            if (!tally.failure) tally.failure = make_counterexample(def.id, descriptor, operands, std::move(o.detail));
            continue;
        }
        tally.record(o);
    }

    if (sweep_bound > 0) {
        report.instances.push_back(sweep_descriptor(def.sweep, sweep_bound));
        tally.merge(sweep(def, sweep_bound, std::max<std::size_t>(1, options.threads)));
    }

    report.checked = tally.checked;
    report.skipped = tally.skipped;
    if (tally.failure) {
        report.verdict = Verdict::Fail;
        report.reason = tally.failure->detail;
        report.counterexample = std::move(tally.failure);
    } else if (tally.checked > 0) {
        report.verdict = Verdict::Pass;
    } else {
        report.verdict = Verdict::Skipped;
        report.reason = tally.first_skip.empty() ? "no instances" : tally.first_skip;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace srgraph
