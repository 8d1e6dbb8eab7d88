#include "trichrome/graph.hpp"

#include <algorithm>

namespace trichrome {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: set not within vertex range");
    const std::vector<int> keep = s.to_vector();
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (!g.labels.empty() && !g.label(keep[i]).empty())
            out.set_label(static_cast<int>(i), g.label(keep[i]));
    }
    return out;
}

namespace {

Graph union_impl(const Graph& g, const Graph& h, bool with_join_edges) {
    if (g.n + h.n > kMaxVertices)
        throw capacity_error("combined vertex count exceeds 64");
    Graph out(g.n + h.n);
    for (int v = 0; v < g.n; ++v)
        out.adj[static_cast<std::size_t>(v)] = g.adj[static_cast<std::size_t>(v)];
    const std::uint64_t left_mask = VertexSet::full(g.n).bits;
    for (int v = 0; v < h.n; ++v)
        out.adj[static_cast<std::size_t>(g.n + v)] = h.adj[static_cast<std::size_t>(v)] << g.n;
    if (with_join_edges) {
        const std::uint64_t right_mask = VertexSet::full(out.n).bits & ~left_mask;
        for (int v = 0; v < g.n; ++v) out.adj[static_cast<std::size_t>(v)] |= right_mask;
        for (int v = 0; v < h.n; ++v) out.adj[static_cast<std::size_t>(g.n + v)] |= left_mask;
    }
    if (!g.labels.empty() || !h.labels.empty()) {
        for (int v = 0; v < g.n; ++v)
            if (!g.label(v).empty()) out.set_label(v, g.label(v));
        for (int v = 0; v < h.n; ++v)
            if (!h.label(v).empty()) out.set_label(g.n + v, h.label(v));
    }
    return out;
}

} // namespace

Graph join(const Graph& g, const Graph& h) { return union_impl(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return union_impl(g, h, false); }

bool is_connected(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("connectivity undefined for the empty graph");
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1)
            next |= g.adj[static_cast<std::size_t>(std::countr_zero(b))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertices().bits;
}

bool is_stable(const Graph& g, VertexSet s) {
    for (std::uint64_t b = s.bits; b; b &= b - 1)
        if (g.adj[static_cast<std::size_t>(std::countr_zero(b))] & s.bits) return false;
    return true;
}

bool is_dominating(const Graph& g, VertexSet d, VertexSet target) {
    for (std::uint64_t b = (target - d).bits; b; b &= b - 1)
        if (!(g.adj[static_cast<std::size_t>(std::countr_zero(b))] & d.bits)) return false;
    return true;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    Bipartition parts;
    std::uint64_t seen = 0;
    const std::uint64_t all = g.vertices().bits;
    for (int root = 0; root < g.n; ++root) {
        if ((seen >> root) & 1) continue;
        std::uint64_t level = 1ull << root;
        bool left_side = true;
        while (level) {
            if (left_side)
                parts.left.bits |= level;
            else
                parts.right.bits |= level;
            seen |= level;
            std::uint64_t next = 0;
            for (std::uint64_t b = level; b; b &= b - 1)
                next |= g.adj[static_cast<std::size_t>(std::countr_zero(b))];
            level = next & ~seen & all;
            left_side = !left_side;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        const std::uint64_t side =
            parts.left.contains(v) ? parts.left.bits : parts.right.bits;
        if (g.adj[static_cast<std::size_t>(v)] & side) return std::nullopt;
    }
    return parts;
}

namespace {

void clique_search(const Graph& g, std::uint64_t candidates, int size, int& best) {
    if (size + std::popcount(candidates) <= best) return;
    if (!candidates) {
        best = std::max(best, size);
        return;
    }
    // branch on candidates not adjacent to a pivot; the pivot's neighbors
    // alone cannot all be skipped
    const int pivot = std::countr_zero(candidates);
    std::uint64_t branch = candidates & ~g.adj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t b = branch; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        clique_search(g, candidates & g.adj[static_cast<std::size_t>(v)], size + 1, best);
        candidates &= ~(1ull << v);
    }
}

void stable_sets_search(const Graph& g, std::uint64_t all, std::uint64_t chosen,
                        std::uint64_t candidates, std::uint64_t excluded,
                        std::vector<VertexSet>& out) {
    if (!candidates && !excluded) {
        out.push_back(VertexSet(chosen));
        return;
    }
    // Bron-Kerbosch with pivoting on the complement graph
    int pivot = -1, best_cover = -1;
    for (std::uint64_t b = candidates | excluded; b; b &= b - 1) {
        const int u = std::countr_zero(b);
        const std::uint64_t nonneighbors =
            all & ~g.adj[static_cast<std::size_t>(u)] & ~(1ull << u);
        const int cover = std::popcount(candidates & nonneighbors);
        if (cover > best_cover) {
            best_cover = cover;
            pivot = u;
        }
    }
    const std::uint64_t pivot_nonneighbors =
        all & ~g.adj[static_cast<std::size_t>(pivot)] & ~(1ull << pivot);
    std::uint64_t branch = candidates & ~pivot_nonneighbors;
    for (std::uint64_t b = branch; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const std::uint64_t nv = all & ~g.adj[static_cast<std::size_t>(v)] & ~(1ull << v);
        stable_sets_search(g, all, chosen | (1ull << v), candidates & nv, excluded & nv, out);
        candidates &= ~(1ull << v);
        excluded |= 1ull << v;
    }
}

} // namespace

int clique_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("clique number needs at least one vertex");
    int best = 0;
    clique_search(g, g.vertices().bits, 0, best);
    return best;
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
    return maximal_stable_sets(g, g.vertices());
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g, VertexSet within) {
    if (within.empty()) throw std::invalid_argument("stable set enumeration needs at least one vertex");
    if (!within.subset_of(g.vertices()))
        throw std::invalid_argument("stable set enumeration: set not within vertex range");
    std::vector<VertexSet> out;
    stable_sets_search(g, within.bits, 0, within.bits, 0, out);
    std::sort(out.begin(), out.end(), set_list_less);
    return out;
}

VertexSet cut_vertices(const Graph& g) {
    VertexSet cuts;
    if (g.n <= 2) return cuts;
    // iterative DFS lowpoint computation
    std::vector<int> disc(static_cast<std::size_t>(g.n), -1), low(static_cast<std::size_t>(g.n), 0),
        parent(static_cast<std::size_t>(g.n), -1);
    int timer = 0;
    for (int root = 0; root < g.n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<std::pair<int, std::uint64_t>> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.emplace_back(root, g.adj[static_cast<std::size_t>(root)]);
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, todo] = stack.back();
            if (todo) {
                const int w = std::countr_zero(todo);
                todo &= todo - 1;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = v;
                    if (v == root) ++root_children;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.emplace_back(w, g.adj[static_cast<std::size_t>(w)]);
                } else if (w != parent[static_cast<std::size_t>(v)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                const int p = parent[static_cast<std::size_t>(v)];
                if (p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (p != root && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                        cuts.add(p);
                }
            }
        }
        if (root_children >= 2) cuts.add(root);
    }
    return cuts;
}

} // namespace trichrome
