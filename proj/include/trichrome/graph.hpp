#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trichrome/errors.hpp"

namespace trichrome {

inline constexpr int kMaxVertices = 64;

// Subset of {0..63}, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr void add(int v) { bits |= 1ull << v; }
    constexpr void remove(int v) { bits &= ~(1ull << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }
};

// Ascending-vertex-list order; used wherever a deterministic set order is promised.
inline bool set_list_less(VertexSet a, VertexSet b) {
    while (a.bits && b.bits) {
        int va = a.lowest(), vb = b.lowest();
        if (va != vb) return va < vb;
        a.remove(va);
        b.remove(vb);
    }
    return a.bits == 0 && b.bits != 0;
}

// Simple undirected graph on vertices 0..n-1, adjacency rows as bitsets.
// Labels are advisory metadata from the construction builders; equality
// and isomorphism ignore them.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::string> labels;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices) {
        if (vertices < 0 || vertices > kMaxVertices)
            throw capacity_error("graph order must be between 0 and 64");
        adj.assign(static_cast<std::size_t>(vertices), 0);
    }

    bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj[static_cast<std::size_t>(u)] |= 1ull << v;
        adj[static_cast<std::size_t>(v)] |= 1ull << u;
    }

    VertexSet neighbors(int v) const { return VertexSet(adj[static_cast<std::size_t>(v)]); }
    int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)]); }

    int edge_count() const {
        int total = 0;
        for (auto row : adj) total += std::popcount(row);
        return total / 2;
    }

    VertexSet vertices() const { return VertexSet::full(n); }

    const std::string& label(int v) const {
        static const std::string none;
        return static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : none;
    }

    void set_label(int v, std::string text) {
        if (labels.size() < static_cast<std::size_t>(n)) labels.resize(static_cast<std::size_t>(n));
        labels[static_cast<std::size_t>(v)] = std::move(text);
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// Convenience builders used throughout tests and the realizer recipes.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

// G[s], vertices renumbered in ascending original index.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Disjoint union plus all edges between the two vertex sets.
Graph join(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

bool is_stable(const Graph& g, VertexSet s);

// Every vertex of target \ d has a neighbor in d.
bool is_dominating(const Graph& g, VertexSet d, VertexSet target);

struct Bipartition {
    VertexSet left, right;
};

// Two-coloring witness if one exists; component containing its smallest
// vertex on the left, so the output is deterministic.
std::optional<Bipartition> is_bipartite(const Graph& g);

int clique_number(const Graph& g);

// All inclusion-maximal stable sets, sorted by ascending vertex list.
std::vector<VertexSet> maximal_stable_sets(const Graph& g);

// Same, within the induced subgraph on `within` (host vertex numbering).
std::vector<VertexSet> maximal_stable_sets(const Graph& g, VertexSet within);

// Vertices whose removal disconnects g (empty for n <= 2 connected graphs).
VertexSet cut_vertices(const Graph& g);

} // namespace trichrome
