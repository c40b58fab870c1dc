#include "srgraph/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "srgraph/io.hpp"
#include "srgraph/iso.hpp"
#include "srgraph/products.hpp"

namespace srgraph {

namespace {

std::vector<std::string> prefixed(const std::string& prefix, std::size_t first, std::size_t last) {
    std::vector<std::string> out;
    for (auto i = first; i <= last; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(ErrorCode::InvalidParameter, what);
}

Graph index_labeled(GraphBuilder b) {
    std::vector<std::string> ls;
    for (std::size_t v = 0; v < b.order(); ++v) ls.push_back(std::to_string(v));
    b.set_labels(std::move(ls));
    return std::move(b).build();
}

Graph path(std::size_t n) {
    require(n >= 1, "P_n needs n >= 1");
    GraphBuilder b(n);
    for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return index_labeled(std::move(b));
}

Graph cycle(std::size_t n) {
    require(n >= 3, "C_n needs n >= 3");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
    return index_labeled(std::move(b));
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
    std::size_t n = 0;
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require(parts[p] >= 1, "multipartite parts must be nonempty");
        for (std::size_t i = 0; i < parts[p]; ++i) part_of.push_back(p);
        n += parts[p];
    }
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) b.add_edge(u, v);
    return index_labeled(std::move(b));
}

Graph hamming(std::size_t k, std::size_t n) {
    require(k >= 1 && n >= 2, "H_{k,n} needs k >= 1 and n >= 2");
    Graph base = make(family::Complete{n});
    Graph power = base;
    for (std::size_t i = 1; i < k; ++i) power = product(ProductKind::Cartesian, power, base);
    std::vector<std::string> ls;
    for (std::size_t v = 0; v < power.order(); ++v) {
        std::string digits(k, '0');
        for (std::size_t pos = k, x = v; pos-- > 0; x /= n) digits[pos] = static_cast<char>('0' + x % n);
        ls.push_back(digits);
    }
    return power.with_labels(std::move(ls));
}

Graph petersen() {
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return index_labeled(std::move(b));
}

Graph pruefer_tree(const std::vector<std::size_t>& seq) {
    const std::size_t n = seq.size() + 2;
    for (auto x : seq) require(x < n, "Pruefer entries must be below n = length + 2");
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) ++degree[x];
    GraphBuilder b(n);
    for (auto x : seq) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        b.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
        --degree[leaf];
        --degree[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) last.push_back(v);
    b.add_edge(last[0], last[1]);
    return index_labeled(std::move(b));
}

Graph family_f(std::size_t r) {
    require(r >= 2, "family F needs r >= 2");
    const auto k = r + 1;
    auto a = [](std::size_t i) { return static_cast<Vertex>(i); };
    auto bb = [k](std::size_t i) { return static_cast<Vertex>(k + i); };
    auto c = [k](std::size_t i) { return static_cast<Vertex>(2 * k + i); };
    const auto x = static_cast<Vertex>(3 * k);
    GraphBuilder b(3 * k + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        b.add_edge(a(i), bb(i));
        b.add_edge(bb(i), c(i));
    }
    for (std::size_t i = 1; i <= r; ++i) {
        b.add_edge(a(i), a(0));
        b.add_edge(bb(i), bb(0));
        b.add_edge(c(i), c(0));
    }
    b.add_edge(x, a(0));
    b.add_edge(x, c(0));
    auto ls = prefixed("a", 0, r);
    for (auto& l : prefixed("b", 0, r)) ls.push_back(l);
    for (auto& l : prefixed("c", 0, r)) ls.push_back(l);
    ls.push_back("x");
    b.set_labels(std::move(ls));
    return std::move(b).build();
}

Graph family_fp(std::size_t n) {
    require(n >= 5, "family F_P needs n >= 5");
    const bool even = n % 2 == 0;
    const std::size_t na = even ? (n - 2) / 2 : (n - 1) / 2;
    const std::size_t nb = even ? (n - 2) / 2 : (n - 3) / 2;
    auto v = [](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto a = [n](std::size_t i) { return static_cast<Vertex>(n - 1 + i - 1); };
    auto bv = [n, na](std::size_t i) { return static_cast<Vertex>(n - 1 + na + i - 1); };
    GraphBuilder b(n - 1 + na + nb);
    for (std::size_t i = 1; i + 1 <= n - 1; ++i) b.add_edge(v(i), v(i + 1));
    if (even) {
        for (std::size_t i = 1; i <= (n - 2) / 2; ++i) {
            b.add_edge(a(i), v(2 * i - 1));
            b.add_edge(a(i), v(2 * i + 1));
        }
        for (std::size_t i = 1; i <= (n - 4) / 2; ++i) {
            b.add_edge(bv(i), v(2 * i));
            b.add_edge(bv(i), v(2 * i + 2));
        }
        b.add_edge(bv((n - 2) / 2), v(n - 2));
        b.add_edge(bv((n - 2) / 2), v(n - 1));
    } else {
        for (std::size_t i = 1; i <= (n - 3) / 2; ++i) {
            b.add_edge(a(i), v(2 * i - 1));
            b.add_edge(a(i), v(2 * i + 1));
        }
        b.add_edge(a((n - 1) / 2), v(n - 2));
        b.add_edge(a((n - 1) / 2), v(n - 1));
        for (std::size_t i = 1; i <= (n - 3) / 2; ++i) {
            b.add_edge(bv(i), v(2 * i));
            b.add_edge(bv(i), v(2 * i + 2));
        }
    }
    auto ls = prefixed("v", 1, n - 1);
    for (auto& l : prefixed("a", 1, na)) ls.push_back(l);
    for (auto& l : prefixed("b", 1, nb)) ls.push_back(l);
    b.set_labels(std::move(ls));
    return std::move(b).build();
}

Graph cycle_star(std::size_t n) {
    require(n >= 5 && n % 2 == 1, "C_n^* needs odd n >= 5");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + n / 2) % n));
    return index_labeled(std::move(b));
}

struct Maker {
    Graph operator()(const family::Path& s) const { return path(s.n); }
    Graph operator()(const family::Cycle& s) const { return cycle(s.n); }
    Graph operator()(const family::Complete& s) const {
        require(s.n >= 1, "K_n needs n >= 1");
        return complete_multipartite(std::vector<std::size_t>(s.n, 1));
    }
    Graph operator()(const family::Empty& s) const {
        require(s.n >= 1, "N_n needs n >= 1");
        return index_labeled(GraphBuilder(s.n));
    }
    Graph operator()(const family::Star& s) const {
        require(s.leaves >= 1, "a star needs a leaf");
        return complete_multipartite({1, s.leaves});
    }
    Graph operator()(const family::CompleteBipartite& s) const { return complete_multipartite({s.r, s.t}); }
    Graph operator()(const family::CompleteMultipartite& s) const {
        require(!s.parts.empty(), "multipartite graphs need a part");
        return complete_multipartite(s.parts);
    }
    Graph operator()(const family::Hypercube& s) const { return hamming(s.k, 2); }
    Graph operator()(const family::Hamming& s) const { return hamming(s.k, s.n); }
    Graph operator()(const family::Petersen&) const { return petersen(); }
    Graph operator()(const family::TreeFromPruefer& s) const { return pruefer_tree(s.sequence); }
    Graph operator()(const family::FamilyF& s) const { return family_f(s.r); }
    Graph operator()(const family::FamilyFP& s) const { return family_fp(s.n); }
    Graph operator()(const family::CycleStar& s) const { return cycle_star(s.n); }
    Graph operator()(const family::JoinK1& s) const {
        require(s.g != nullptr, "join needs an operand");
        return join_k1(*s.g);
    }
};

Graph lettered(std::size_t n, std::initializer_list<std::pair<char, char>> edges) {
    GraphBuilder b(n);
    for (auto [x, y] : edges) b.add_edge(static_cast<Vertex>(x - 'a'), static_cast<Vertex>(y - 'a'));
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < n; ++i) ls.emplace_back(1, static_cast<char>('a' + i));
    b.set_labels(std::move(ls));
    return std::move(b).build();
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        throw GraphError(ErrorCode::InvalidParameter, "cannot read a number in '" + std::string(whole) + "'");
    return value;
}

std::vector<std::size_t> parse_counts(std::string_view text, std::string_view whole) {
    std::vector<std::size_t> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_count(text.substr(0, comma), whole));
        if (comma == std::string_view::npos) return out;
        text.remove_prefix(comma + 1);
    }
}

}  // namespace

Graph make(const FamilySpec& spec) { return std::visit(Maker{}, spec); }

Graph join_k1(const Graph& g) {
    const auto n = g.order();
    GraphBuilder b(n + 1);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    std::vector<std::string> ls;
    for (Vertex v = 0; v < n; ++v) {
        b.add_edge(v, static_cast<Vertex>(n));
        ls.push_back(g.name(v));
    }
    ls.push_back("k1");
    b.set_labels(std::move(ls));
    return std::move(b).build();
}

std::vector<std::string> fixture_names() { return {"fig1g", "fig2", "fig5", "fig6g", "fig6h", "h7", "paw"}; }

Graph fixture(std::string_view name) {
    if (name == "fig1g")
        return lettered(7, {{'a', 'g'}, {'g', 'c'}, {'c', 'b'}, {'b', 'a'}, {'c', 'f'}, {'f', 'e'}, {'e', 'd'}, {'d', 'c'},
                            {'g', 'b'}, {'f', 'd'}, {'c', 'e'}});
    if (name == "fig2")
        return lettered(10, {{'a', 'j'}, {'j', 'c'}, {'c', 'b'}, {'b', 'a'}, {'c', 'i'}, {'i', 'e'}, {'e', 'd'}, {'d', 'c'},
                             {'e', 'h'}, {'h', 'g'}, {'g', 'f'}, {'f', 'e'}, {'j', 'b'}, {'h', 'f'}, {'e', 'g'}});
    if (name == "fig5")
        return lettered(8, {{'a', 'b'}, {'b', 'e'}, {'e', 'f'}, {'f', 'g'}, {'g', 'a'}, {'g', 'h'}, {'b', 'c'}, {'b', 'd'}});
    if (name == "fig6g") {
        // 5-cycle u a b c d plus v joined to a and d; u and v share no 5-cycle
        return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}}, {"u", "a", "b", "c", "d", "v"});
    }
    if (name == "fig6h")
        return lettered(8, {{'a', 'b'}, {'g', 'h'}, {'c', 'b'}, {'c', 'f'}, {'b', 'g'}, {'a', 'h'}, {'a', 'd'}, {'c', 'd'},
                            {'d', 'e'}, {'f', 'e'}, {'g', 'e'}, {'f', 'h'}});
    if (name == "h7")
        return lettered(7, {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'e'}, {'e', 'f'}, {'f', 'g'}, {'c', 'e'}});
    if (name == "paw") return lettered(4, {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}, {'c', 'd'}});
    throw GraphError(ErrorCode::InvalidParameter, "unknown fixture '" + std::string(name) + "'");
}

Graph graph_from_spec(std::string_view text) {
    const std::string_view whole = text;
    if (text.starts_with("co:")) return complement(graph_from_spec(text.substr(3)));
    if (text.starts_with("g6:")) return parse_graph6(text.substr(3));
    if (text.starts_with("K1+"))
        return make(family::JoinK1{std::make_shared<const Graph>(graph_from_spec(text.substr(3)))});
    if (text.starts_with("pruefer:")) {
        auto rest = text.substr(8);
        return make(family::TreeFromPruefer{rest.empty() ? std::vector<std::size_t>{} : parse_counts(rest, whole)});
    }
    if (text == "petersen") return make(family::Petersen{});
    for (const auto& f : fixture_names())
        if (text == f) return fixture(text);
    if (text.starts_with("FP")) return make(family::FamilyFP{parse_count(text.substr(2), whole)});
    if (text.empty()) throw GraphError(ErrorCode::InvalidParameter, "empty graph spec");
    const char head = text[0];
    auto rest = text.substr(1);
    switch (head) {
        case 'P': return make(family::Path{parse_count(rest, whole)});
        case 'C':
            if (rest.ends_with("*")) return make(family::CycleStar{parse_count(rest.substr(0, rest.size() - 1), whole)});
            return make(family::Cycle{parse_count(rest, whole)});
        case 'N': return make(family::Empty{parse_count(rest, whole)});
        case 'S': return make(family::Star{parse_count(rest, whole)});
        case 'Q': return make(family::Hypercube{parse_count(rest, whole)});
        case 'F': return make(family::FamilyF{parse_count(rest, whole)});
        case 'H': {
            auto v = parse_counts(rest, whole);
            if (v.size() != 2) throw GraphError(ErrorCode::InvalidParameter, "Hamming spec is H<k>,<n>");
            return make(family::Hamming{v[0], v[1]});
        }
        case 'K': {
            auto v = parse_counts(rest, whole);
            if (v.size() == 1) return make(family::Complete{v[0]});
            if (v.size() == 2) return make(family::CompleteBipartite{v[0], v[1]});
            return make(family::CompleteMultipartite{v});
        }
        default: break;
    }
    throw GraphError(ErrorCode::InvalidParameter, "unrecognised graph spec '" + std::string(whole) + "'");
}

// ---------------------------------------------------------------------------
// enumeration

std::uint64_t mask_count(std::size_t n) {
    if (n > kEnumerationOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "enumeration is capped at order 8");
    return std::uint64_t{1} << (n * (n > 0 ? n - 1 : 0) / 2);
}

namespace {

struct PairTable {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    explicit PairTable(std::size_t n) {
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
};

bool mask_connected(std::size_t n, const std::uint64_t* rows) {
    if (n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (auto f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint64_t{1} << n) - 1;
}

}  // namespace

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    PairTable table(n);
    GraphBuilder b(n);
    for (std::size_t k = 0; k < table.pairs.size(); ++k)
        if ((mask >> k) & 1U) b.add_edge(table.pairs[k].first, table.pairs[k].second);
    return std::move(b).build();
}

std::size_t enumerate_graphs(std::size_t n, const EnumerationOptions& options,
                             const std::function<bool(const Graph&, std::uint64_t)>& visit) {
    const auto total = mask_count(n);
    const auto end = options.end_mask == 0 ? total : std::min(options.end_mask, total);
    PairTable table(n);
    std::set<CanonicalForm> seen;
    std::size_t visited = 0;
    std::uint64_t rows[kEnumerationOrderCap];
    for (auto mask = options.first_mask; mask < end; ++mask) {
        std::fill(rows, rows + n, 0);
        for (auto m = mask; m; m &= m - 1) {
            auto [i, j] = table.pairs[std::countr_zero(m)];
            rows[i] |= std::uint64_t{1} << j;
            rows[j] |= std::uint64_t{1} << i;
        }
        if (options.deduplicate) {
            bool sorted = true;
            for (std::size_t v = 1; v < n && sorted; ++v) sorted = std::popcount(rows[v - 1]) <= std::popcount(rows[v]);
            if (!sorted) continue;
        }
        if (options.connected_only && !mask_connected(n, rows)) continue;
        Graph g = graph_from_mask(n, mask);
        if (options.deduplicate && !seen.insert(canonical_form(g)).second) continue;
        ++visited;
        if (!visit(g, mask)) break;
    }
    return visited;
}

std::vector<Graph> connected_classes(std::size_t n) {
    std::vector<Graph> out;
    enumerate_graphs(n, {.connected_only = true, .deduplicate = true}, [&](const Graph& g, std::uint64_t) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace srgraph
