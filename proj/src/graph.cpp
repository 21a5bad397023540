#include "zsf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace zsf {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty()) fail(std::string("missing ") + what);
    long long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(std::string("bad ") + what + ": " + std::string(s));
        v = v * 10 + (c - '0');
        if (v > 1'000'000) fail(std::string("out-of-range ") + what);
    }
    return static_cast<int>(v);
}

}  // namespace

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.to_vector()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) fail("vertex count must be in [0, 64]");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
        if (u == v) fail("loop edge " + std::to_string(u) + "-" + std::to_string(v));
        if (has_edge(u, v))
            fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u] |= 1ull << v;
        adj_[v] |= 1ull << u;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
}

Graph parse_graph(std::string_view text) {
    if (text.find(';') != std::string_view::npos) return parse_edge_list(text);
    return parse_graph6(text);
}

Graph parse_edge_list(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) fail("edge list needs `n; ...`");
    int n = parse_int(text.substr(0, semi), "vertex count");
    std::vector<std::pair<int, int>> edges;
    std::string_view rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) fail("empty edge entry");
        auto dash = item.find('-');
        if (dash == std::string_view::npos) fail("edge must be `u-v`: " + std::string(item));
        edges.emplace_back(parse_int(item.substr(0, dash), "vertex"),
                           parse_int(item.substr(dash + 1), "vertex"));
    }
    return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.empty()) fail("empty graph6 string");
    if (text[0] == ':' || text[0] == ';' || text[0] == '&')
        fail("sparse6/digraph6 encodings are not supported");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) fail("graph6 long form (n > 62) is not supported");
    if (c0 < 63 || c0 > 126) fail("invalid graph6 character");
    int n = c0 - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nchars = (nbits + 5) / 6;
    if (text.size() != 1 + nchars)
        fail("graph6 length mismatch: expected " + std::to_string(1 + nchars) + " characters");
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
            if (c < 63 || c > 126) fail("invalid graph6 character");
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (; bit < nchars * 6; ++bit) {
        unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
        if ((c - 63) >> (5 - bit % 6) & 1) fail("nonzero graph6 padding");
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    if (g.n() > 62) fail("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Graph path_graph(int n) {
    if (n < 0) fail("path order must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) fail("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) fail("star needs >= 0 leaves");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) fail("grid needs positive dimensions");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    }
    return Graph(rows * cols, edges);
}

namespace {

std::uint64_t reach_from(const Graph& g, int start, std::uint64_t universe) {
    std::uint64_t seen = 1ull << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.adj_bits(std::countr_zero(m));
        frontier = next & universe & ~seen;
        seen |= frontier;
    }
    return seen;
}

}  // namespace

bool is_connected_set(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    return reach_from(g, s.lowest(), s.bits) == s.bits;
}

bool is_connected(const Graph& g) {
    return g.n() > 0 && is_connected_set(g, g.vertices());
}

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.edge_count() == g.n() - 1 && is_connected(g);
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet universe) {
    std::vector<VertexSet> out;
    std::uint64_t todo = universe.bits & g.vertex_bits();
    while (todo) {
        int v = std::countr_zero(todo);
        std::uint64_t comp = reach_from(g, v, todo);
        out.push_back(VertexSet{comp});
        todo &= ~comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, g.vertices());
}

Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* orig) {
    std::vector<int> ids = s.to_vector();
    std::vector<int> slot(g.n(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) slot[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (slot[u] >= 0 && slot[v] >= 0) edges.emplace_back(slot[u], slot[v]);
    if (orig) *orig = ids;
    return Graph(static_cast<int>(ids.size()), edges);
}

}  // namespace zsf
