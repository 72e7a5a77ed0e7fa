#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rp {

// A subset of the vertices of a graph of order parent_n, stored as a bit
// vector (bit v set <=> vertex v in the set).
struct VertexSet {
    std::uint64_t bits = 0;
    int parent_n = 0;

    int size() const;
    bool empty() const { return bits == 0; }
    bool contains(int v) const { return (bits >> v) & 1u; }
    std::vector<int> to_vector() const;
    std::string str() const; // "{0,2,3}"

    static VertexSet of(std::initializer_list<int> vs, int parent_n);
    static VertexSet from_vector(const std::vector<int>& vs, int parent_n);
    static VertexSet from_mask(std::uint64_t bits, int parent_n) { return {bits, parent_n}; }

    bool operator==(const VertexSet&) const = default;
};

// Simple undirected graph on at most 64 vertices. Adjacency rows are
// bit vectors, so induced subgraphs, components and connectivity reduce
// to word operations.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int n);

    // Duplicate edges collapse; self-loops and out-of-range endpoints throw.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    std::uint64_t vertex_mask() const;
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int v) const;
    bool is_complete() const;

    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on s, vertices relabeled by ascending original index.
    Graph induced(const VertexSet& s) const;
    Graph induced_mask(std::uint64_t s) const;

    bool is_connected() const;
    // True iff G[s] is connected; s must be nonempty.
    bool connected_within(std::uint64_t s) const;
    // Vertices reachable from seed inside `within` (seed must be in within).
    std::uint64_t closure_from(int seed, std::uint64_t within) const;

    // Components of G - removed, ordered by ascending minimum vertex.
    // removed must be a proper subset of V.
    std::vector<VertexSet> components(const VertexSet& removed) const;
    std::vector<VertexSet> components_within(std::uint64_t s) const;
    int component_count_within(std::uint64_t s) const;
    // Sizes in the same deterministic order as components_within.
    std::vector<int> component_sizes_within(std::uint64_t s) const;

    // Edge-list text format: "n <count>" first, then one "u v" pair per
    // line, 0-indexed; '#' starts a comment line.
    static Graph read_edge_list(std::istream& in);
    void write_edge_list(std::ostream& out) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

} // namespace rp
