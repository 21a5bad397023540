#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsf {

// Vertex subset of a graph on at most 64 vertices.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet single(int v) { return VertexSet{1ull << v}; }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet all(int n) { return VertexSet{n == 64 ? ~0ull : (1ull << n) - 1}; }

    bool contains(int v) const { return (bits >> v) & 1u; }
    VertexSet& add(int v) {
        bits |= 1ull << v;
        return *this;
    }
    VertexSet& remove(int v) {
        bits &= ~(1ull << v);
        return *this;
    }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    int lowest() const { return std::countr_zero(bits); }
    bool subset_of(VertexSet o) const { return (bits & o.bits) == bits; }
    bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
    friend bool operator==(VertexSet, VertexSet) = default;
    friend auto operator<=>(VertexSet, VertexSet) = default;
};

std::string to_string(VertexSet s);

// Simple undirected graph on vertices 0..n-1, immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t adj_bits(int v) const { return adj_[v]; }
    VertexSet neighbors(int v) const { return VertexSet{adj_[v]}; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    std::uint64_t vertex_bits() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
    VertexSet vertices() const { return VertexSet{vertex_bits()}; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Accepts graph6 or the edge-list format `n; u-v,u-v,...`.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);  // short form, n <= 62
std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph grid_graph(int rows, int cols);  // row-major vertex ids

// Connectivity of the subgraph induced by `s`; the empty set is not connected.
bool is_connected_set(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, VertexSet universe);

// Subgraph induced by `s`, relabeled to 0..|s|-1 in ascending vertex order;
// when given, `orig` receives the original id of each new vertex.
Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* orig = nullptr);

}  // namespace zsf
