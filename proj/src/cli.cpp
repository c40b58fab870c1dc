#include "srgraph/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/products.hpp"
#include "srgraph/resolving.hpp"
#include "srgraph/strong_dimension.hpp"
#include "srgraph/verify.hpp"

namespace srgraph {
namespace {

using nlohmann::json;

/// A file path when one exists, otherwise a family spec; "-" reads stdin.
Graph load_graph(const std::string& source) {
    if (source == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph_text(buf.str());
    }
    if (std::filesystem::is_regular_file(source)) return read_graph_file(source);
    return graph_from_spec(source);
}

std::string set_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto v : s.members()) {
        if (!first) out += ",";
        out += g.name(v);
        first = false;
    }
    return out + "}";
}

json set_json(const Graph& g, const VertexSet& s) {
    json arr = json::array();
    for (auto v : s.members()) arr.push_back(g.name(v));
    return arr;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
    json j{{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
    if (g.order() <= kGraph6OrderCap) j["graph6"] = emit_graph6(g);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

struct GraphOutput {
    std::string format = "g6";
    bool as_json = false;
    bool canonical = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"g6", "edges"}));
        cmd->add_flag("--json", as_json, "Emit JSON");
        cmd->add_flag("--canonical", canonical, "Relabel into canonical order first");
    }
    void write(std::ostream& out, const Graph& input) const {
        const auto g = canonical ? permute(input, canonical_form(input).labeling) : input;
        if (as_json) out << graph_json(g).dump(2) << '\n';
        else if (format == "edges") out << emit_edge_list(g);
        else out << emit_graph6(g) << '\n';
    }
};

json report_json(const TheoremReport& r) {
    json j{{"theorem", r.theorem},
           {"anchor_quote", r.anchor},
           {"instances", r.instances},
           {"verdict", std::string(to_string(r.verdict))},
           {"elapsed_ms", r.elapsed_ms},
           {"checked", r.checked},
           {"skipped", r.skipped}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"instance", c.instance}, {"graph6", c.graph6}, {"command", c.command},
                               {"detail", c.detail}};
    }
    return j;
}

void print_report(std::ostream& out, const TheoremReport& r) {
    out << r.theorem << ' ' << to_string(r.verdict) << "  checked " << r.checked << ", skipped " << r.skipped << ", "
        << static_cast<long long>(r.elapsed_ms) << " ms";
    if (r.verdict == Verdict::Skipped) out << "  (" << r.reason << ')';
    out << '\n';
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out << "  instance: " << c.instance << '\n';
        for (std::size_t i = 0; i < c.graph6.size(); ++i) out << "  operand " << i << ": " << c.graph6[i] << '\n';
        out << "  detail:   " << c.detail << '\n';
        out << "  repro:    " << c.command << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong resolving graphs, strong metric dimension and product theorems", "srgtool"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    int status = kExitOk;

    // graph -> graph transforms
    struct Transform {
        const char* name;
        const char* help;
        Graph (*fn)(const Graph&);
    };
    static const Transform transforms[] = {
        {"srg", "Strong resolving graph on the boundary", srg},
        {"srgi", "Strong resolving graph plus the non-boundary vertices", srg_plus_i},
        {"gstar", "G*: distance >= 2 or true twins", g_star},
        {"srs", "Strong resolving TF-graph", srs},
    };
    std::string input;
    GraphOutput output;
    for (const auto& t : transforms) {
        auto* cmd = app.add_subcommand(t.name, t.help);
        cmd->add_option("--in", input, "Graph file (graph6 or edge list), family spec, or - for stdin")->required();
        output.add_to(cmd);
        cmd->callback([&, fn = t.fn] { output.write(out, fn(load_graph(input))); });
    }

    auto* dims = app.add_subcommand("dims", "Strong metric dimension");
    std::string route = "srg";
    bool dims_json = false;
    dims->add_option("--in", input, "Input graph")->required();
    dims->add_option("--route", route, "oracle, srg or both")->check(CLI::IsMember({"oracle", "srg", "both"}));
    dims->add_flag("--json", dims_json, "Emit JSON");
    dims->callback([&] {
        const auto g = load_graph(input);
        std::vector<DimsResult> results;
        if (route != "srg") results.push_back(dims_oracle(g));
        if (route != "oracle") results.push_back(dims_via_srg(g));
        json arr = json::array();
        for (const auto& r : results) {
            if (dims_json)
                arr.push_back({{"route", std::string(to_string(r.route))},
                               {"dimension", r.dimension},
                               {"basis", set_json(g, r.basis)}});
            else
                out << r.dimension << ' ' << set_text(g, r.basis) << "  (" << to_string(r.route) << ")\n";
        }
        if (dims_json) out << arr.dump(2) << '\n';
        if (results.size() == 2 && results[0].dimension != results[1].dimension) status = kExitFail;
    });

    auto* prod = app.add_subcommand("product", "Graph product of two operands");
    std::string kind, left, right;
    prod->add_option("--kind", kind, "cartesian, direct, strong, lexicographic, cartesian-sum, corona")->required();
    prod->add_option("--left", left, "First operand")->required();
    prod->add_option("--right", right, "Second operand")->required();
    output.add_to(prod);
    prod->callback([&] { output.write(out, product(parse_product_kind(kind), load_graph(left), load_graph(right))); });

    auto* fam = app.add_subcommand("family", "Build a named graph (P5, C7*, FP9, K2,3, petersen, ...)");
    std::string spec;
    fam->add_option("spec", spec, "Family spec")->required();
    output.add_to(fam);
    fam->callback([&] { output.write(out, graph_from_spec(spec)); });

    auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 0 when isomorphic, 1 otherwise");
    iso->add_option("first", left, "First graph")->required();
    iso->add_option("second", right, "Second graph")->required();
    iso->callback([&] {
        const auto g = load_graph(left), h = load_graph(right);
        const auto r = isomorphism(g, h);
        if (!r.isomorphic) {
            out << "not isomorphic\n";
            status = kExitFail;
            return;
        }
        out << "isomorphic\n";
        for (Vertex v = 0; v < g.order(); ++v) out << g.name(v) << " -> " << h.name((*r.mapping)[v]) << '\n';
    });

    auto* ver = app.add_subcommand("verify", "Check theorem instances");
    std::string theorem, instance, grid_file;
    std::size_t max_order = 0, threads = std::max(1u, std::thread::hardware_concurrency());
    bool ver_json = false;
    ver->add_option("--theorem", theorem, "Theorem id or 'all'")->required();
    ver->add_option("--max-order", max_order, "Enumeration bound / operand order filter");
    ver->add_option("--instance", instance, "Single instance, e.g. \"C5 ; K3\"");
    ver->add_option("--grids", grid_file, "Grid file replacing the built-in grids")->check(CLI::ExistingFile);
    ver->add_option("--threads", threads, "Workers for exhaustive sweeps")->check(CLI::PositiveNumber);
    ver->add_flag("--json", ver_json, "Emit JSON reports");
    ver->callback([&] {
        GridConfig custom;
        VerifyOptions opts;
        opts.threads = threads;
        if (max_order) opts.max_order = max_order;
        if (!instance.empty()) opts.instance = instance;
        if (!grid_file.empty()) {
            std::ifstream in(grid_file);
            std::stringstream buf;
            buf << in.rdbuf();
            custom = parse_grid_config(buf.str());
            opts.grids = &custom;
        }
        const auto ids = theorem == "all" ? theorem_ids() : std::vector<std::string>{theorem};
        json reports = json::array();
        for (const auto& id : ids) {
            const auto r = verify_theorem(id, opts);
            if (r.verdict == Verdict::Fail) status = kExitFail;
            if (ver_json) reports.push_back(report_json(r));
            else print_report(out, r);
        }
        if (ver_json) out << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    });

    auto* search = app.add_subcommand("search", "Look for graphs whose SR graph is the target");
    std::string target_file, resume_file, frontier_file;
    std::size_t search_order = 7, budget = 0;
    std::vector<std::string> seeds;
    bool finish_order = false, search_json = false;
    search->add_option("--target", target_file, "Target graph")->required();
    search->add_option("--max-order", search_order, "Largest order enumerated (<= 8)");
    search->add_option("--resume", resume_file, "Frontier file to resume from (and keep updating)");
    search->add_option("--frontier", frontier_file, "Frontier file to write");
    search->add_option("--seed", seeds, "Candidate tried before enumeration");
    search->add_option("--budget", budget, "Stop after this many new classes");
    search->add_flag("--finish-order", finish_order, "Collect every realizer at the first successful order");
    search->add_flag("--json", search_json, "Emit JSON");
    search->callback([&] {
        SearchOptions opts;
        opts.max_order = search_order;
        opts.finish_order = finish_order;
        opts.class_budget = budget;
        for (const auto& s : seeds) opts.seeds.push_back(load_graph(s));
        if (!resume_file.empty()) {
            opts.frontier_path = resume_file;
            opts.resume = true;
        } else if (!frontier_file.empty()) {
            opts.frontier_path = frontier_file;
        }
        const auto r = realization_search(load_graph(target_file), opts);
        if (search_json) {
            json found = json::array();
            for (const auto& g : r.realizers) found.push_back(emit_graph6(g));
            out << json{{"outcome", std::string(to_string(r.outcome))},
                        {"max_order", r.max_order},
                        {"order_reached", r.order_reached},
                        {"classes_tested", r.classes_tested},
                        {"realizers", found}}
                       .dump(2)
                << '\n';
            return;
        }
        out << to_string(r.outcome) << "  max order " << r.max_order << ", classes tested " << r.classes_tested
            << '\n';
        for (const auto& g : r.realizers) out << emit_graph6(g) << '\n';
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return status;
}

}  // namespace srgraph
