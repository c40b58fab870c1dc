#include "srgraph/iso.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace srgraph {

namespace {

using Mask = std::uint64_t;

struct Partition {
    std::vector<std::uint32_t> colour;
    std::uint32_t cells = 0;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.order()), done_(g.order() + 1) {
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.row_mask(v);
    }

    std::vector<Vertex> run() {
        Partition root{std::vector<std::uint32_t>(n_, 0), n_ > 0 ? 1U : 0U};
        refine(root);
        search(root, 0);
        return best_pos_;
    }

    const std::vector<std::uint64_t>& best_code() const { return best_code_; }

private:
    static constexpr std::size_t kNoJump = ~std::size_t{0};

    void refine(Partition& p) const {
        std::vector<std::uint32_t> sig;
        while (true) {
            const std::size_t k = p.cells;
            std::vector<Mask> cell(k, 0);
            for (Vertex v = 0; v < n_; ++v) cell[p.colour[v]] |= Mask{1} << v;
            sig.assign(n_ * (k + 1), 0);
            for (Vertex v = 0; v < n_; ++v) {
                sig[v * (k + 1)] = p.colour[v];
                for (std::size_t c = 0; c < k; ++c)
                    sig[v * (k + 1) + 1 + c] = static_cast<std::uint32_t>(std::popcount(adj_[v] & cell[c]));
            }
            std::vector<Vertex> order(n_);
            std::iota(order.begin(), order.end(), 0);
            auto less = [&](Vertex a, Vertex b) {
                return std::lexicographical_compare(sig.begin() + a * (k + 1), sig.begin() + (a + 1) * (k + 1),
                                                    sig.begin() + b * (k + 1), sig.begin() + (b + 1) * (k + 1));
            };
            std::sort(order.begin(), order.end(), less);
            std::uint32_t next = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0 && less(order[i - 1], order[i])) ++next;
                p.colour[order[i]] = next;
            }
            const auto cells = n_ > 0 ? next + 1 : 0;
            if (cells == p.cells) return;
            p.cells = cells;
        }
    }

    Partition individualize(const Partition& p, Vertex v) const {
        Partition q = p;
        const auto c = p.colour[v];
        for (Vertex u = 0; u < n_; ++u)
            if (p.colour[u] > c || (p.colour[u] == c && u != v)) ++q.colour[u];
        ++q.cells;
        refine(q);
        return q;
    }

    std::vector<std::uint64_t> encode(const std::vector<std::uint32_t>& pos) const {
        std::vector<Vertex> inv(n_);
        for (Vertex v = 0; v < n_; ++v) inv[pos[v]] = v;
        std::vector<std::uint64_t> code(words_for(n_ * (n_ > 0 ? n_ - 1 : 0) / 2), 0);
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i, ++bit)
                if ((adj_[inv[i]] >> inv[j]) & 1U) code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        return code;
    }

    bool twins(Vertex a, Vertex b) const {
        const Mask ba = Mask{1} << a, bb = Mask{1} << b;
        return (adj_[a] & ~bb) == (adj_[b] & ~ba);
    }

    std::vector<std::uint32_t> orbits_fixing(std::size_t depth) const {
        std::vector<std::uint32_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (std::size_t i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) {
                auto a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    std::size_t leaf(const Partition& p, std::size_t depth) {
        auto code = encode(p.colour);
        if (best_pos_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_pos_.assign(p.colour.begin(), p.colour.end());
            return kNoJump;
        }
        if (code != best_code_) return kNoJump;
        std::vector<Vertex> inv(n_);
        for (Vertex v = 0; v < n_; ++v) inv[best_pos_[v]] = v;
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (Vertex v = 0; v < n_; ++v) {
            gamma[v] = inv[p.colour[v]];
            identity = identity && gamma[v] == v;
        }
        if (identity) return kNoJump;
        automorphisms_.push_back(gamma);
        for (std::size_t d = 0; d < depth; ++d) {
            auto image = gamma[path_[d]];
            if (image != path_[d] && std::find(done_[d].begin(), done_[d].end(), image) != done_[d].end()) return d;
            if (image != path_[d]) return kNoJump;
        }
        return kNoJump;
    }

    std::size_t search(const Partition& p, std::size_t depth) {
        if (p.cells == n_) return leaf(p, depth);
        std::vector<std::size_t> size(p.cells, 0);
        for (Vertex v = 0; v < n_; ++v) ++size[p.colour[v]];
        std::uint32_t target = 0;
        std::size_t smallest = n_ + 1;
        for (std::uint32_t c = 0; c < p.cells; ++c)
            if (size[c] > 1 && size[c] < smallest) {
                smallest = size[c];
                target = c;
            }
        done_[depth].clear();
        for (Vertex v = 0; v < n_; ++v) {
            if (p.colour[v] != target) continue;
            bool redundant = false;
            for (auto w : done_[depth])
                if (twins(v, w)) redundant = true;
            if (!redundant && !automorphisms_.empty()) {
                auto orbit = orbits_fixing(depth);
                for (auto w : done_[depth])
                    if (orbit[w] == orbit[v]) redundant = true;
            }
            if (!redundant) {
                path_.push_back(v);
                auto jump = search(individualize(p, v), depth + 1);
                path_.pop_back();
                if (jump != kNoJump && jump < depth) {
                    done_[depth].push_back(v);
                    return jump;
                }
            }
            done_[depth].push_back(v);
        }
        return kNoJump;
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    std::vector<std::vector<Vertex>> done_;
    std::vector<Vertex> path_;
    std::vector<std::vector<Vertex>> automorphisms_;
    std::vector<std::uint64_t> best_code_;
    std::vector<Vertex> best_pos_;
};

std::size_t count_triangles(const Graph& g) {
    std::size_t t = 0;
    for (auto [u, v] : g.edges()) t += static_cast<std::size_t>(std::popcount(g.row_mask(u) & g.row_mask(v)));
    return t / 3;
}

}  // namespace

std::string CanonicalForm::key() const {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = std::to_string(order) + ":";
    for (auto w : code)
        for (int s = 60; s >= 0; s -= 4) out.push_back(hex[(w >> s) & 0xF]);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kIsoOrderCap) throw GraphError(ErrorCode::OrderTooLarge, "canonical forms are capped at order 64");
    CanonicalForm f;
    f.order = g.order();
    CanonicalSearch search(g);
    f.labeling = search.run();
    f.code = search.best_code();
    for (Vertex v = 0; v < g.order(); ++v) f.degree_multiset.push_back(g.degree(v));
    std::sort(f.degree_multiset.begin(), f.degree_multiset.end());
    f.triangles = count_triangles(g);
    return f;
}

Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.order()) throw GraphError(ErrorCode::InvalidParameter, "permutation size differs from order");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    if (g.has_labels()) {
        std::vector<std::string> ls(g.order());
        for (Vertex v = 0; v < g.order(); ++v) ls[perm[v]] = g.labels()[v];
        b.set_labels(std::move(ls));
    }
    return std::move(b).build();
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping) {
    if (g.order() != h.order() || mapping.size() != g.order()) return false;
    std::vector<bool> hit(h.order(), false);
    for (auto x : mapping) {
        if (x >= h.order() || hit[x]) return false;
        hit[x] = true;
    }
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v])) return false;
    return true;
}

IsoResult isomorphism(const Graph& g, const Graph& h) {
    if (g.order() > kIsoOrderCap || h.order() > kIsoOrderCap)
        throw GraphError(ErrorCode::OrderTooLarge, "isomorphism is capped at order 64");
    if (g.order() != h.order() || g.size() != h.size()) return {};
    std::vector<std::size_t> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh || count_triangles(g) != count_triangles(h)) return {};
    auto fg = canonical_form(g);
    auto fh = canonical_form(h);
    if (fg != fh) return {};
    std::vector<Vertex> inv_h(h.order());
    for (Vertex v = 0; v < h.order(); ++v) inv_h[fh.labeling[v]] = v;
    std::vector<Vertex> mapping(g.order());
    for (Vertex v = 0; v < g.order(); ++v) mapping[v] = inv_h[fg.labeling[v]];
    if (!is_isomorphism(g, h, mapping)) throw std::logic_error("canonical forms agree but the witness mapping fails");
    return {true, std::move(mapping)};
}

bool are_isomorphic(const Graph& g, const Graph& h) { return isomorphism(g, h).isomorphic; }

bool is_spanning_subgraph(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw GraphError(ErrorCode::LabelMismatch, "vertex counts differ");
    std::unordered_map<std::string, Vertex> where;
    for (Vertex v = 0; v < h.order(); ++v) where.emplace(h.name(v), v);
    std::vector<Vertex> to_h(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto it = where.find(g.name(v));
        if (it == where.end()) throw GraphError(ErrorCode::LabelMismatch, "label '" + g.name(v) + "' missing on the right");
        to_h[v] = it->second;
    }
    for (auto [u, v] : g.edges())
        if (!h.adjacent(to_h[u], to_h[v])) return false;
    return true;
}

}  // namespace srgraph
