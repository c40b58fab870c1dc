#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "srgraph/cli.hpp"
#include "srgraph/families.hpp"
#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/resolving.hpp"

using namespace srgraph;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = (std::filesystem::temp_directory_path() / ("srgraph_cli_" + name)).string();
    std::ofstream(path) << body;
    return path;
}

std::string data(const std::string& name) { return std::string(SRGRAPH_TEST_DATA) + "/" + name; }

// Splits a shell-style command line with double-quoted arguments.
std::vector<std::string> shell_words(const std::string& line) {
    std::vector<std::string> words;
    std::string cur;
    bool quoted = false, any = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            any = true;
        } else if (ch == ' ' && !quoted) {
            if (any) words.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += ch;
            any = true;
        }
    }
    if (any) words.push_back(cur);
    return words;
}

}  // namespace

TEST_CASE("odd cycle is a fixed point of srg") {
    const auto c5 = make(family::Cycle{5});
    const auto file = write_temp("c5.g6", emit_graph6(c5) + "\n");
    const auto r = call({"srg", "--in", file});
    CHECK(r.code == kExitOk);
    CHECK(are_isomorphic(parse_graph6(r.out.substr(0, r.out.find('\n'))), c5));
    const auto canon = call({"srg", "--in", file, "--canonical"});
    CHECK(canon.out == call({"family", "C5", "--canonical"}).out);
}

TEST_CASE("transforms and formats") {
    const auto r = call({"srgi", "--in", "P4", "--format", "edges"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "n 4\nlabels 0 1 2 3\n0 3\n");
    const auto j = nlohmann::json::parse(call({"gstar", "--in", "P4", "--json"}).out);
    CHECK(j["order"] == 4);
    CHECK(j["size"] == 3);
    CHECK(j["graph6"].is_string());
    CHECK(call({"srs", "--in", "C5"}).code == kExitOk);
    const auto complete = call({"srs", "--in", "K3"});
    CHECK(complete.code == kExitUsage);
    CHECK(complete.err.find("CompleteInput") != std::string::npos);
    CHECK(call({"srg", "--in", "C5", "--format", "dot"}).code == kExitUsage);
}

TEST_CASE("dims on the eight-vertex fixture") {
    const auto r = call({"dims", "--in", data("fig5.edges"), "--route", "both"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "4 {a,c,d,e}  (oracle)\n4 {a,c,d,e}  (srg)\n");
    const auto j = nlohmann::json::parse(call({"dims", "--in", data("fig5.edges"), "--json"}).out);
    CHECK(j.size() == 1);
    CHECK(j[0]["dimension"] == 4);
    CHECK(j[0]["route"] == "srg");
    CHECK(call({"dims", "--in", "N2"}).code == kExitUsage);
}

TEST_CASE("product, family and iso") {
    const auto p = call({"product", "--kind", "direct", "--left", "C5", "--right", "C5", "--format", "edges"});
    CHECK(p.code == kExitOk);
    CHECK(p.out.starts_with("n 25\n"));
    CHECK(parse_edge_list(p.out).size() == 50);
    CHECK(call({"product", "--kind", "nope", "--left", "C5", "--right", "C5"}).code == kExitUsage);
    CHECK(call({"family", "K2,3"}).out == emit_graph6(make(family::CompleteBipartite{2, 3})) + "\n");
    CHECK(call({"family", "X9"}).code == kExitUsage);

    const auto yes = call({"iso", "C5", "co:C5"});
    CHECK(yes.code == kExitOk);
    CHECK(yes.out.starts_with("isomorphic\n"));
    const auto no = call({"iso", "P4", "C4"});
    CHECK(no.code == kExitFail);
    CHECK(no.out == "not isomorphic\n");
}

TEST_CASE("verify exit codes and reports") {
    const auto ok = call({"verify", "--theorem", "T20", "--max-order", "4"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.starts_with("T20 PASS"));

    const auto j = nlohmann::json::parse(call({"verify", "--theorem", "T20", "--instance", "C3 ; C3", "--json"}).out);
    CHECK(j["theorem"] == "T20");
    CHECK(j["verdict"] == "PASS");
    for (auto key : {"anchor_quote", "instances", "elapsed_ms", "checked", "skipped"}) CHECK(j.contains(key));
    CHECK_FALSE(j.contains("counterexample"));

    CHECK(call({"verify", "--theorem", "T99"}).code == kExitUsage);
    CHECK(call({"verify", "--theorem", "T3", "--max-order", "7"}).code == kExitUsage);
    CHECK(call({"verify"}).code == kExitUsage);
}

TEST_CASE("a FAIL report replays through its own repro command") {
    const auto fail = call({"verify", "--theorem", "T12", "--instance", "P3", "--json"});
    CHECK(fail.code == kExitFail);
    const auto j = nlohmann::json::parse(fail.out);
    REQUIRE(j.contains("counterexample"));
    const std::string command = j["counterexample"]["command"];
    auto words = shell_words(command);
    REQUIRE(words.front() == "srgtool");
    words.erase(words.begin());
    const auto replay = call(words);
    CHECK(replay.code == kExitFail);
    CHECK(replay.out.starts_with("T12 FAIL"));

    // The graph6 operand alone reproduces it too.
    const std::string g6 = j["counterexample"]["graph6"][0];
    CHECK(call({"verify", "--theorem", "T12", "--instance", "g6:" + g6}).code == kExitFail);
}

TEST_CASE("custom grid file") {
    const auto grids = write_temp("grids.toml", "[T20]\ninstance = P2 ; P3\n");
    const auto r = call({"verify", "--theorem", "T20", "--grids", grids, "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["instances"] == nlohmann::json::array({"P2 ; P3"}));
    CHECK(call({"verify", "--theorem", "T20", "--grids", "/nonexistent.toml"}).code == kExitUsage);
}

TEST_CASE("search") {
    const auto target = write_temp("p4.edges", "0 1\n1 2\n2 3\n");
    const auto found = call({"search", "--target", target, "--max-order", "5"});
    CHECK(found.code == kExitOk);
    CHECK(found.out.starts_with("FOUND"));
    const auto lines = found.out.substr(found.out.find('\n') + 1);
    CHECK(are_isomorphic(srg(parse_graph6(lines.substr(0, lines.find('\n')))), make(family::Path{4})));

    const auto j = nlohmann::json::parse(call({"search", "--target", "C4", "--max-order", "5", "--json"}).out);
    CHECK(j["outcome"] == "EXHAUSTED");
    CHECK(j["classes_tested"] == 1 + 1 + 2 + 6 + 21);

    const auto frontier = write_temp("frontier.json", "");
    std::filesystem::remove(frontier);
    const auto part = call({"search", "--target", "C4", "--max-order", "5", "--frontier", frontier, "--budget", "10"});
    CHECK(part.out.starts_with("ABORTED"));
    const auto rest = call({"search", "--target", "C4", "--max-order", "5", "--resume", frontier});
    CHECK(rest.out.starts_with("EXHAUSTED  max order 5, classes tested 31"));
    std::filesystem::remove(frontier);

    const auto seeded = call({"search", "--target", "P9", "--max-order", "3", "--seed", "FP9"});
    CHECK(seeded.out.starts_with("FOUND"));
    CHECK(call({"search", "--target", "C4", "--max-order", "9"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"frobnicate"}).code == kExitUsage);
    const auto missing = call({"srg"});
    CHECK(missing.code == kExitUsage);
    CHECK_FALSE(missing.err.empty());
    const auto help = call({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("verify") != std::string::npos);
}
