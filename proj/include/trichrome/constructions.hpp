#pragma once

#include "trichrome/coloring.hpp"
#include "trichrome/graph.hpp"

namespace trichrome {

// Target invariants (chi, Gamma, psi).
struct Triple {
    int f = 2;
    int g = 2;
    int h = 2;

    bool operator==(const Triple&) const = default;
};

// Throws invalid_argument unless 2 <= f <= g <= h.
void validate_triple(const Triple& t);

// B_k: partite sets u_1..u_{k-1} and w_2..w_k, edges u_i w_j for i < j.
// Vertices numbered u's first, then w's; labels set accordingly.
Graph basic_bipartite(int k);

// B_h plus the edges {u_i w_j | 1 <= i-j <= g-3, 2 <= i <= h-1, 2 <= j <= h-2}.
Graph g_star(int g, int h);

// K_{t,t} minus a perfect matching: a_i adjacent to b_j exactly when i != j.
Graph reduced_graph(int t);

// B_ell plus isolated u_ell and w_1; vertices u_1..u_ell then w_1..w_ell,
// edges u_i w_j for i < j.
Graph extended_graph(int ell);

// Extended graph on ell = h-2 plus q_1 adjacent to all u's, q_2 adjacent to
// all w's, q_2u_ell and q_1q_2; variant 1 also has q_1w_1. q_1, q_2 are the
// last two vertices.
Graph l_graph(int h, int variant);

// True iff g >= 3 or (f,g,h) = (2,2,2).
bool is_realizable(const Triple& t);

// Minimum order of a connected graph with the given invariants:
// f (f = g = h), 2h-f (f < g), 2h-f+1 (2 < f = g < h), 2 for (2,2,2).
int min_order(const Triple& t);

// A connected graph of exactly min_order(t) vertices attaining t.
Graph realize(const Triple& t);

// Grundy g-coloring of g_star(g,h): u_1 -> g, {u_i,w_i} -> i-1 for
// i = 2..g-1, u_g..u_{h-1} -> 1, w_g..w_h -> g-1.
Coloring grundy_witness_gstar(int g, int h);

// Complete h-coloring of basic_bipartite(h) with classes {u_1}, {u_i,w_i}
// for i = 2..h-1, {w_h}; stays valid on any g_star(g,h) since inserted
// edges never join u_i to w_i.
Coloring achromatic_witness_gstar(int h);

// Complete h-coloring of l_graph(h,variant) with classes {u_i,w_i},
// {q_1}, {q_2}.
Coloring achromatic_witness_l(int h, int variant);

} // namespace trichrome
