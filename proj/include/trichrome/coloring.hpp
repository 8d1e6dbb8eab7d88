#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

// Total assignment vertex -> color in {1..k}; every class 1..k nonempty.
struct Coloring {
    Graph host;
    std::vector<int> colors;
    int k = 0;

    VertexSet color_class(int c) const {
        VertexSet s;
        for (int v = 0; v < host.n; ++v)
            if (colors[static_cast<std::size_t>(v)] == c) s.add(v);
        return s;
    }
};

// No monochromatic edge.
bool is_proper(const Coloring& c);

// Proper and every pair of color classes is joined by an edge.
bool is_complete(const Coloring& c);

// Proper and each vertex of color j has a neighbor of every color below j.
bool is_grundy(const Coloring& c);

struct SolvedInvariant {
    int value = 0;
    Coloring witness;
};

// Exact decision: does g admit a proper k-coloring? Branches on the most
// saturated uncolored vertex.
bool properly_colorable(const Graph& g, int k);

// Exact chromatic number; the witness is the lexicographically least
// proper chi-coloring (colors in first-use order), which is necessarily
// complete.
SolvedInvariant chromatic_number(const Graph& g);

inline constexpr int kGrundyBudget = 24;
inline constexpr int kAchromaticBudget = 16;
inline constexpr int kFirstFitBudget = 10;

// Exact Grundy number via the recursion over maximal stable sets of the
// remaining graph, memoized on vertex subsets. Witness is rebuilt
// deterministically, taking at each level the first optimal stable set in
// ascending vertex-list order.
SolvedInvariant grundy_number(const Graph& g);

// Ordering oracle: worst case of First-Fit over all vertex orders.
int grundy_by_firstfit(const Graph& g);

// Exact achromatic number; witness is the lexicographically least complete
// psi-coloring.
SolvedInvariant achromatic_number(const Graph& g);

// Lexicographically least complete k-coloring, if any exists.
std::optional<Coloring> complete_coloring_with(const Graph& g, int k);

inline constexpr int kCompleteStreamBudget = 12;

// Every complete k-coloring, one per relabeling class (colors normalized to
// first-use order), in lexicographic order. Host budget n <= 12.
std::vector<Coloring> all_complete_colorings(const Graph& g, int k);

// Witness for Gamma(G) > k: an induced subgraph H with Gamma(H) >= k and a
// stable set disjoint from H dominating it.
struct GrundyCertificate {
    VertexSet h_set;
    VertexSet s_set;
    int k = 0;
};

struct CertificateCheck {
    bool ok = false;
    std::string reason;
    int implied_lower_bound = 0; // k+1 when ok

    explicit operator bool() const { return ok; }
};

CertificateCheck check_certificate(const Graph& g, const GrundyCertificate& cert);

// Property (Pi): every component is an isolated vertex or a complete
// bipartite graph; equivalent to Gamma <= 2.
bool has_property_pi(const Graph& g);

struct InvariantReport {
    int n = 0;
    int m = 0;
    int omega = 0;
    int chi = 0;
    int gamma = 0;
    int psi = 0;
    Coloring chi_witness, gamma_witness, psi_witness;

    bool matches(int f, int g, int h) const { return chi == f && gamma == g && psi == h; }
};

InvariantReport analyze(const Graph& g);

} // namespace trichrome
