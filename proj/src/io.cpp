#include "srgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace srgraph {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<std::size_t> as_index(std::string_view token) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) return std::nullopt;
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw GraphError(ErrorCode::MalformedInput, "empty graph6 string");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw GraphError(ErrorCode::MalformedInput, "graph6 byte out of range");
    if (text[0] == 126) throw GraphError(ErrorCode::UnsupportedLongForm, "graph6 long form (order > 62) is not supported");
    const std::size_t n = static_cast<std::size_t>(text[0] - 63);
    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw GraphError(ErrorCode::MalformedInput, "graph6 length " + std::to_string(text.size()) + " does not match order " +
                                                        std::to_string(n));
    GraphBuilder b(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int group = text[1 + k / 6] - 63;
            if ((group >> (5 - k % 6)) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    if (bits % 6 != 0) {
        const int last = text.back() - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw GraphError(ErrorCode::MalformedInput, "graph6 padding bits are set");
    }
    return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
    const auto n = g.order();
    if (n > kGraph6OrderCap) throw GraphError(ErrorCode::UnsupportedLongForm, "graph6 long form (order > 62) is not supported");
    std::string out(1, static_cast<char>(63 + n));
    int group = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<std::string> labels;
    bool fixed_labels = false;
    std::vector<std::pair<std::string, std::string>> raw;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto where = " on line " + std::to_string(lineno);
        if (tok[0] == "n") {
            if (tok.size() != 2 || !as_index(tok[1])) throw GraphError(ErrorCode::MalformedInput, "bad order header" + where);
            declared = *as_index(tok[1]);
        } else if (tok[0] == "labels") {
            labels.assign(tok.begin() + 1, tok.end());
            fixed_labels = true;
        } else if (tok.size() == 2) {
            raw.emplace_back(tok[0], tok[1]);
        } else {
            throw GraphError(ErrorCode::MalformedInput, "expected two endpoints" + where);
        }
    }
    bool numeric = !fixed_labels;
    for (const auto& [u, v] : raw)
        if (!as_index(u) || !as_index(v)) numeric = false;
    std::vector<Edge> edges;
    if (numeric) {
        std::size_t n = declared.value_or(0);
        for (const auto& [u, v] : raw) {
            edges.emplace_back(static_cast<Vertex>(*as_index(u)), static_cast<Vertex>(*as_index(v)));
            if (!declared) n = std::max({n, *as_index(u) + 1, *as_index(v) + 1});
        }
        return build_graph(n, edges);
    }
    std::map<std::string, Vertex> index;
    for (Vertex i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], i).second) throw GraphError(ErrorCode::DuplicateLabel, "label '" + labels[i] + "'");
    auto resolve = [&](const std::string& t) {
        if (auto it = index.find(t); it != index.end()) return it->second;
        if (fixed_labels) throw GraphError(ErrorCode::UnknownVertex, "label '" + t + "' is not declared");
        labels.push_back(t);
        return index[t] = static_cast<Vertex>(labels.size() - 1);
    };
    for (const auto& [u, v] : raw) {
        auto a = resolve(u);
        edges.emplace_back(a, resolve(v));
    }
    if (declared && *declared != labels.size())
        throw GraphError(ErrorCode::MalformedInput, "order header disagrees with the label count");
    return build_graph(labels.size(), edges, labels);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    if (g.has_labels()) {
        out << "labels";
        for (const auto& l : g.labels()) out << ' ' << l;
        out << '\n';
    }
    for (auto [u, v] : g.edges()) out << g.name(u) << ' ' << g.name(v) << '\n';
    return out.str();
}

Graph parse_graph_text(std::string_view text) {
    auto body = trim(text);
    bool edge_list = body.find_first_of(" \t\n#") != std::string_view::npos;
    if (body.starts_with(">>graph6<<")) edge_list = false;
    return edge_list ? parse_edge_list(body) : parse_graph6(body);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(ErrorCode::MalformedInput, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

}  // namespace srgraph
