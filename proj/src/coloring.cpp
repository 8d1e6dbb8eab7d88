#include "trichrome/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace trichrome {

namespace {

// Class bitmasks indexed 1..k; throws if the assignment is not a coloring
// in the structural sense (total, colors in range, no empty class).
std::vector<std::uint64_t> class_masks(const Coloring& c) {
    if (c.host.n < 1) throw std::invalid_argument("coloring needs at least one vertex");
    if (static_cast<int>(c.colors.size()) != c.host.n)
        throw std::invalid_argument("coloring length does not match graph order");
    if (c.k < 1 || c.k > c.host.n)
        throw std::invalid_argument("class count out of range");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v = 0; v < c.host.n; ++v) {
        const int col = c.colors[static_cast<std::size_t>(v)];
        if (col < 1 || col > c.k) throw std::invalid_argument("color out of range");
        masks[static_cast<std::size_t>(col)] |= 1ull << v;
    }
    for (int col = 1; col <= c.k; ++col)
        if (!masks[static_cast<std::size_t>(col)]) throw std::invalid_argument("empty color class");
    return masks;
}

bool proper_under(const Coloring& c, const std::vector<std::uint64_t>& masks) {
    for (int v = 0; v < c.host.n; ++v)
        if (c.host.adj[static_cast<std::size_t>(v)] &
            masks[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(v)])])
            return false;
    return true;
}

} // namespace

bool is_proper(const Coloring& c) { return proper_under(c, class_masks(c)); }

bool is_complete(const Coloring& c) {
    const auto masks = class_masks(c);
    if (!proper_under(c, masks)) return false;
    for (int a = 1; a <= c.k; ++a) {
        std::uint64_t reach = 0;
        for (std::uint64_t b = masks[static_cast<std::size_t>(a)]; b; b &= b - 1)
            reach |= c.host.adj[static_cast<std::size_t>(std::countr_zero(b))];
        for (int b2 = a + 1; b2 <= c.k; ++b2)
            if (!(reach & masks[static_cast<std::size_t>(b2)])) return false;
    }
    return true;
}

bool is_grundy(const Coloring& c) {
    const auto masks = class_masks(c);
    if (!proper_under(c, masks)) return false;
    for (int v = 0; v < c.host.n; ++v) {
        const std::uint64_t row = c.host.adj[static_cast<std::size_t>(v)];
        for (int below = 1; below < c.colors[static_cast<std::size_t>(v)]; ++below)
            if (!(row & masks[static_cast<std::size_t>(below)])) return false;
    }
    return true;
}

namespace {

// Exact k-colorability, branching on the most saturated uncolored vertex.
struct SaturationSearch {
    const Graph& g;
    int k;
    std::vector<int> colors;                 // 0 = unassigned
    std::vector<std::uint64_t> neighbor_colors; // bit c-1 set when some neighbor has color c

    explicit SaturationSearch(const Graph& graph, int classes)
        : g(graph), k(classes),
          colors(static_cast<std::size_t>(graph.n), 0),
          neighbor_colors(static_cast<std::size_t>(graph.n), 0) {}

    bool solve(int assigned, int used) {
        if (assigned == g.n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colors[static_cast<std::size_t>(v)]) continue;
            const int sat = std::popcount(neighbor_colors[static_cast<std::size_t>(v)]);
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            if ((neighbor_colors[static_cast<std::size_t>(pick)] >> (c - 1)) & 1) continue;
            colors[static_cast<std::size_t>(pick)] = c;
            std::uint64_t touched = 0;
            for (std::uint64_t b = g.adj[static_cast<std::size_t>(pick)]; b; b &= b - 1) {
                const int u = std::countr_zero(b);
                if (!((neighbor_colors[static_cast<std::size_t>(u)] >> (c - 1)) & 1)) {
                    neighbor_colors[static_cast<std::size_t>(u)] |= 1ull << (c - 1);
                    touched |= 1ull << u;
                }
            }
            if (solve(assigned + 1, std::max(used, c))) return true;
            for (std::uint64_t b = touched; b; b &= b - 1)
                neighbor_colors[static_cast<std::size_t>(std::countr_zero(b))] &=
                    ~(1ull << (c - 1));
            colors[static_cast<std::size_t>(pick)] = 0;
        }
        return false;
    }
};

} // namespace

bool properly_colorable(const Graph& g, int k) {
    if (k >= g.n) return true;
    return SaturationSearch(g, k).solve(0, 0);
}

namespace {

// Lexicographically least proper coloring with exactly k classes, vertices
// in index order, colors capped at one past the number already used (the
// first-use normal form attains the lex minimum over each class relabeling).
struct LexProperSearch {
    const Graph& g;
    int k;
    std::vector<std::uint64_t> masks;
    std::vector<int> colors;

    LexProperSearch(const Graph& graph, int classes)
        : g(graph), k(classes), masks(static_cast<std::size_t>(classes) + 1, 0),
          colors(static_cast<std::size_t>(graph.n), 0) {}

    bool fill(int v, int used) {
        if (v == g.n) return used == k;
        if (used + (g.n - v) < k) return false;
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            if (masks[static_cast<std::size_t>(c)] & g.adj[static_cast<std::size_t>(v)]) continue;
            masks[static_cast<std::size_t>(c)] |= 1ull << v;
            colors[static_cast<std::size_t>(v)] = c;
            if (fill(v + 1, std::max(used, c))) return true;
            masks[static_cast<std::size_t>(c)] &= ~(1ull << v);
        }
        return false;
    }
};

} // namespace

SolvedInvariant chromatic_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("chromatic number needs at least one vertex");
    int k = clique_number(g);
    while (!properly_colorable(g, k)) ++k;
    LexProperSearch lex(g, k);
    if (!lex.fill(0, 0)) throw std::logic_error("colorable graph lost its witness");
    return {k, Coloring{g, std::move(lex.colors), k}};
}

namespace {

struct GrundyState {
    const Graph& g;
    std::unordered_map<std::uint64_t, int> memo;

    int value(std::uint64_t rem) {
        if (!rem) return 0;
        if (auto it = memo.find(rem); it != memo.end()) return it->second;
        int best = 0;
        for (const VertexSet s : maximal_stable_sets(g, VertexSet(rem)))
            best = std::max(best, 1 + value(rem & ~s.bits));
        memo.emplace(rem, best);
        return best;
    }
};

} // namespace

SolvedInvariant grundy_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("Grundy number needs at least one vertex");
    if (g.n > kGrundyBudget) throw capacity_error("Grundy solver limited to 24 vertices");
    GrundyState state{g, {}};
    const int total = state.value(g.vertices().bits);

    // Rebuild a witness: color classes are peeled as maximal stable sets of
    // what remains, class of color 1 first; ties broken by the sets' order.
    std::vector<int> colors(static_cast<std::size_t>(g.n), 0);
    std::uint64_t rem = g.vertices().bits;
    for (int level = 1; level <= total; ++level) {
        for (const VertexSet s : maximal_stable_sets(g, VertexSet(rem))) {
            if (1 + state.value(rem & ~s.bits) != total - level + 1) continue;
            for (std::uint64_t b = s.bits; b; b &= b - 1)
                colors[static_cast<std::size_t>(std::countr_zero(b))] = level;
            rem &= ~s.bits;
            break;
        }
    }
    if (rem) throw std::logic_error("Grundy witness reconstruction left vertices uncolored");
    return {total, Coloring{g, std::move(colors), total}};
}

int grundy_by_firstfit(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("first-fit sweep needs at least one vertex");
    if (g.n > kFirstFitBudget) throw capacity_error("first-fit sweep limited to 10 vertices");
    std::vector<int> colors(static_cast<std::size_t>(g.n), 0);
    int best = 0;
    auto sweep = [&](auto&& self, std::uint64_t placed, int high) -> void {
        if (high + (g.n - std::popcount(placed)) <= best) return; // each arrival adds at most one
        if (placed == g.vertices().bits) {
            best = std::max(best, high);
            return;
        }
        for (std::uint64_t b = ~placed & g.vertices().bits; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            std::uint64_t taken = 0;
            for (std::uint64_t nb = g.adj[static_cast<std::size_t>(v)] & placed; nb; nb &= nb - 1)
                taken |= 1ull << (colors[static_cast<std::size_t>(std::countr_zero(nb))] - 1);
            const int c = std::countr_one(taken) + 1;
            colors[static_cast<std::size_t>(v)] = c;
            self(self, placed | (1ull << v), std::max(high, c));
            colors[static_cast<std::size_t>(v)] = 0;
        }
    };
    sweep(sweep, 0, 0);
    return best;
}

namespace {

// Lexicographically least complete k-coloring, vertices in index order.
// Prunes on class stability, on classes still needed, and on the pair
// coverage each unassigned vertex can still add (at most min(deg, k-1)).
struct CompleteSearch {
    const Graph& g;
    int k;
    int total_pairs;
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> covered; // covered[a] bit b: classes a,b joined
    std::vector<int> suffix_cap;
    std::vector<int> colors;
    std::vector<Coloring>* sink = nullptr; // when set, collect every leaf

    CompleteSearch(const Graph& graph, int classes)
        : g(graph), k(classes), total_pairs(classes * (classes - 1) / 2),
          masks(static_cast<std::size_t>(classes) + 1, 0),
          covered(static_cast<std::size_t>(classes) + 1, 0),
          suffix_cap(static_cast<std::size_t>(graph.n) + 1, 0),
          colors(static_cast<std::size_t>(graph.n), 0) {
        for (int v = g.n - 1; v >= 0; --v)
            suffix_cap[static_cast<std::size_t>(v)] = suffix_cap[static_cast<std::size_t>(v) + 1] +
                                                      std::min(g.degree(v), k - 1);
    }

    bool fill(int v, int used, int covered_count) {
        if (v == g.n) {
            if (used != k || covered_count != total_pairs) return false;
            if (!sink) return true;
            sink->push_back(Coloring{g, colors, k});
            return false;
        }
        if (used + (g.n - v) < k) return false;
        if (covered_count + suffix_cap[static_cast<std::size_t>(v)] < total_pairs) return false;
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            if (masks[static_cast<std::size_t>(c)] & g.adj[static_cast<std::size_t>(v)]) continue;
            int gained = 0;
            std::uint64_t newly = 0; // classes first joined to c by this vertex
            for (std::uint64_t b = g.adj[static_cast<std::size_t>(v)]; b; b &= b - 1) {
                const int other = colors[static_cast<std::size_t>(std::countr_zero(b))];
                if (!other) continue;
                if (!((covered[static_cast<std::size_t>(c)] >> other) & 1) &&
                    !((newly >> other) & 1)) {
                    newly |= 1ull << other;
                    ++gained;
                }
            }
            masks[static_cast<std::size_t>(c)] |= 1ull << v;
            colors[static_cast<std::size_t>(v)] = c;
            covered[static_cast<std::size_t>(c)] |= newly;
            for (std::uint64_t b = newly; b; b &= b - 1)
                covered[static_cast<std::size_t>(std::countr_zero(b))] |= 1ull << c;
            if (fill(v + 1, std::max(used, c), covered_count + gained)) return true;
            for (std::uint64_t b = newly; b; b &= b - 1)
                covered[static_cast<std::size_t>(std::countr_zero(b))] &= ~(1ull << c);
            covered[static_cast<std::size_t>(c)] &= ~newly;
            colors[static_cast<std::size_t>(v)] = 0;
            masks[static_cast<std::size_t>(c)] &= ~(1ull << v);
        }
        return false;
    }
};

} // namespace

std::optional<Coloring> complete_coloring_with(const Graph& g, int k) {
    if (g.n < 1) throw std::invalid_argument("complete coloring needs at least one vertex");
    if (g.n > kAchromaticBudget)
        throw capacity_error("complete coloring search limited to 16 vertices");
    if (k < 1 || k > g.n) throw std::invalid_argument("class count out of range");
    if (k * (k - 1) / 2 > g.edge_count()) return std::nullopt;
    CompleteSearch search(g, k);
    if (!search.fill(0, 0, 0)) return std::nullopt;
    return Coloring{g, std::move(search.colors), k};
}

std::vector<Coloring> all_complete_colorings(const Graph& g, int k) {
    if (g.n < 1) throw std::invalid_argument("complete coloring needs at least one vertex");
    if (g.n > kCompleteStreamBudget)
        throw capacity_error("complete coloring enumeration limited to 12 vertices");
    if (k < 1 || k > g.n) throw std::invalid_argument("class count out of range");
    std::vector<Coloring> out;
    if (k * (k - 1) / 2 > g.edge_count()) return out;
    CompleteSearch search(g, k);
    search.sink = &out;
    search.fill(0, 0, 0);
    return out;
}

SolvedInvariant achromatic_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("achromatic number needs at least one vertex");
    if (g.n > kAchromaticBudget)
        throw capacity_error("achromatic solver limited to 16 vertices");
    // Singleton classes of a complete k-coloring are pairwise adjacent, so
    // k <= (n + omega)/2; the edge count caps k(k-1)/2 as well.
    const int m = g.edge_count();
    int ub = std::min(g.n, (g.n + clique_number(g)) / 2);
    while (ub * (ub - 1) / 2 > m) --ub;
    for (int k = ub; k >= 1; --k)
        if (auto witness = complete_coloring_with(g, k)) return {k, std::move(*witness)};
    throw std::logic_error("no complete coloring at any size");
}

CertificateCheck check_certificate(const Graph& g, const GrundyCertificate& cert) {
    if (!cert.h_set.subset_of(g.vertices()) || !cert.s_set.subset_of(g.vertices()))
        throw std::invalid_argument("certificate sets out of vertex range");
    if (cert.k < 1) throw std::invalid_argument("certificate level must be positive");
    CertificateCheck result;
    if (!(cert.h_set & cert.s_set).empty()) {
        result.reason = "not disjoint";
        return result;
    }
    if (!is_stable(g, cert.s_set)) {
        result.reason = "not stable";
        return result;
    }
    if (!is_dominating(g, cert.s_set, cert.h_set)) {
        result.reason = "does not dominate";
        return result;
    }
    if (cert.h_set.empty() || grundy_number(induced_subgraph(g, cert.h_set)).value < cert.k) {
        result.reason = "induced Grundy number too small";
        return result;
    }
    result.ok = true;
    result.implied_lower_bound = cert.k + 1;
    return result;
}

bool has_property_pi(const Graph& g) {
    std::uint64_t seen = 0;
    for (int root = 0; root < g.n; ++root) {
        if ((seen >> root) & 1) continue;
        std::uint64_t comp = 1ull << root, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1)
                next |= g.adj[static_cast<std::size_t>(std::countr_zero(b))];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        if (std::popcount(comp) == 1) continue;
        const Graph part = induced_subgraph(g, VertexSet(comp));
        const auto sides = is_bipartite(part);
        if (!sides) return false;
        if (part.edge_count() != sides->left.count() * sides->right.count()) return false;
    }
    return true;
}

InvariantReport analyze(const Graph& g) {
    InvariantReport r;
    r.n = g.n;
    r.m = g.edge_count();
    r.omega = clique_number(g);
    auto chi = chromatic_number(g);
    auto gamma = grundy_number(g);
    auto psi = achromatic_number(g);
    r.chi = chi.value;
    r.gamma = gamma.value;
    r.psi = psi.value;
    if (!(r.omega <= r.chi && r.chi <= r.gamma && r.gamma <= r.psi))
        throw std::logic_error("invariant chain violated");
    if (!is_complete(chi.witness) || !is_grundy(gamma.witness) || !is_complete(psi.witness))
        throw std::logic_error("solver returned an invalid witness");
    r.chi_witness = std::move(chi.witness);
    r.gamma_witness = std::move(gamma.witness);
    r.psi_witness = std::move(psi.witness);
    return r;
}

} // namespace trichrome
