#include "trichrome/constructions.hpp"

#include <stdexcept>
#include <string>

namespace trichrome {

namespace {

// Vertex numbering shared by the B_k family: u_i at i-1, w_j at (k-1)+(j-2).
int u_at(int i) { return i - 1; }
int w_at(int k, int j) { return k - 1 + (j - 2); }

} // namespace

void validate_triple(const Triple& t) {
    if (!(2 <= t.f && t.f <= t.g && t.g <= t.h))
        throw std::invalid_argument("triple must satisfy 2 <= f <= g <= h");
}

Graph basic_bipartite(int k) {
    if (k < 2) throw std::invalid_argument("basic bipartite graph needs k >= 2");
    Graph g(2 * k - 2);
    for (int i = 1; i <= k - 1; ++i) g.set_label(u_at(i), "u" + std::to_string(i));
    for (int j = 2; j <= k; ++j) g.set_label(w_at(k, j), "w" + std::to_string(j));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 1; j <= k; ++j) g.add_edge(u_at(i), w_at(k, j));
    return g;
}

Graph g_star(int g, int h) {
    if (g < 3 || g > h) throw std::invalid_argument("g_star needs 3 <= g <= h");
    Graph out = basic_bipartite(h);
    const int gamma = g - 3;
    for (int i = 2; i <= h - 1; ++i)
        for (int j = 2; j <= h - 2; ++j)
            if (1 <= i - j && i - j <= gamma) out.add_edge(u_at(i), w_at(h, j));
    return out;
}

Graph reduced_graph(int t) {
    if (t < 1) throw std::invalid_argument("reduced graph needs t >= 1");
    Graph g(2 * t);
    for (int i = 1; i <= t; ++i) {
        g.set_label(i - 1, "a" + std::to_string(i));
        g.set_label(t + i - 1, "b" + std::to_string(i));
    }
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (i != j) g.add_edge(i - 1, t + j - 1);
    return g;
}

Graph extended_graph(int ell) {
    if (ell < 2) throw std::invalid_argument("extended graph needs ell >= 2");
    Graph g(2 * ell);
    for (int i = 1; i <= ell; ++i) {
        g.set_label(i - 1, "u" + std::to_string(i));
        g.set_label(ell + i - 1, "w" + std::to_string(i));
    }
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) g.add_edge(i - 1, ell + j - 1);
    return g;
}

Graph l_graph(int h, int variant) {
    if (h < 4) throw std::invalid_argument("l_graph needs h >= 4");
    if (variant != 1 && variant != 2) throw std::invalid_argument("l_graph variant must be 1 or 2");
    const int ell = h - 2;
    Graph qs(2);
    qs.set_label(0, "q1");
    qs.set_label(1, "q2");
    Graph g = disjoint_union(extended_graph(ell), qs);
    const int q1 = 2 * ell, q2 = 2 * ell + 1;
    for (int i = 0; i < ell; ++i) {
        g.add_edge(q1, i);        // q_1 to every u
        g.add_edge(q2, ell + i);  // q_2 to every w
    }
    g.add_edge(q2, ell - 1); // q_2 u_ell
    g.add_edge(q1, q2);
    if (variant == 1) g.add_edge(q1, ell); // q_1 w_1
    return g;
}

bool is_realizable(const Triple& t) {
    validate_triple(t);
    return t.g >= 3 || t.h == 2;
}

int min_order(const Triple& t) {
    if (!is_realizable(t)) throw std::domain_error("triple is not realizable");
    if (t.f == t.g && t.g == t.h) return t.f;
    if (t.f < t.g) return 2 * t.h - t.f;
    return 2 * t.h - t.f + 1;
}

namespace {

Graph labeled_clique(int t) {
    Graph g = complete_graph(t);
    for (int v = 0; v < t; ++v) g.set_label(v, "c" + std::to_string(v + 1));
    return g;
}

} // namespace

Graph realize(const Triple& t) {
    if (!is_realizable(t)) throw std::domain_error("triple is not realizable");
    if (t.f == t.g && t.g == t.h) return complete_graph(t.f);
    if (t.f < t.g) return join(g_star(t.g - t.f + 2, t.h - t.f + 2), labeled_clique(t.f - 2));
    return join(l_graph(t.h - t.f + 3, 2), labeled_clique(t.f - 3));
}

Coloring grundy_witness_gstar(int g, int h) {
    if (g < 3 || g > h) throw std::domain_error("grundy witness needs 3 <= g <= h");
    Coloring c{g_star(g, h), std::vector<int>(static_cast<std::size_t>(2 * h - 2), 0), g};
    c.colors[static_cast<std::size_t>(u_at(1))] = g;
    for (int i = 2; i <= g - 1; ++i) {
        c.colors[static_cast<std::size_t>(u_at(i))] = i - 1;
        c.colors[static_cast<std::size_t>(w_at(h, i))] = i - 1;
    }
    for (int i = g; i <= h - 1; ++i) c.colors[static_cast<std::size_t>(u_at(i))] = 1;
    for (int j = g; j <= h; ++j) c.colors[static_cast<std::size_t>(w_at(h, j))] = g - 1;
    if (!is_grundy(c)) throw std::logic_error("constructed witness is not a Grundy coloring");
    return c;
}

Coloring achromatic_witness_gstar(int h) {
    if (h < 2) throw std::domain_error("achromatic witness needs h >= 2");
    Coloring c{basic_bipartite(h), std::vector<int>(static_cast<std::size_t>(2 * h - 2), 0), h};
    c.colors[static_cast<std::size_t>(u_at(1))] = 1;
    for (int i = 2; i <= h - 1; ++i) {
        c.colors[static_cast<std::size_t>(u_at(i))] = i;
        c.colors[static_cast<std::size_t>(w_at(h, i))] = i;
    }
    c.colors[static_cast<std::size_t>(w_at(h, h))] = h;
    if (!is_complete(c)) throw std::logic_error("constructed witness is not a complete coloring");
    return c;
}

Coloring achromatic_witness_l(int h, int variant) {
    if (h < 4) throw std::domain_error("achromatic witness needs h >= 4");
    if (variant != 1 && variant != 2) throw std::domain_error("variant must be 1 or 2");
    const int ell = h - 2;
    Coloring c{l_graph(h, variant), std::vector<int>(static_cast<std::size_t>(2 * h - 2), 0), h};
    for (int i = 1; i <= ell; ++i) {
        c.colors[static_cast<std::size_t>(i - 1)] = i;
        c.colors[static_cast<std::size_t>(ell + i - 1)] = i;
    }
    c.colors[static_cast<std::size_t>(2 * ell)] = h - 1;     // q_1
    c.colors[static_cast<std::size_t>(2 * ell + 1)] = h;     // q_2
    if (!is_complete(c)) throw std::logic_error("constructed witness is not a complete coloring");
    return c;
}

} // namespace trichrome
