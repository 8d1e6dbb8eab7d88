#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trichrome/canonical.hpp"
#include "trichrome/coloring.hpp"
#include "trichrome/constructions.hpp"
#include "trichrome/graph.hpp"

namespace trichrome {

inline constexpr int kEnumerationBudget = 10;

// Streams one representative per isomorphism class of connected graphs on n
// vertices, built by canonical augmentation. `keep` runs on worker threads
// (it must be thread-safe) and drops classes before they reach the caller;
// `visit` runs on the calling thread in an order independent of the thread
// count. Returns the class count before filtering.
long long for_each_connected_graph(
    int n, int threads, const std::function<bool(const Graph&, const CanonicalForm&)>& keep,
    const std::function<void(const Graph&, const CanonicalForm&)>& visit);

long long for_each_connected_graph(
    int n, int threads, const std::function<void(const Graph&, const CanonicalForm&)>& visit);

// Materialized connected classes; capped at n <= 9 to keep the result in
// memory (n = 10 has 11.7M classes — stream those).
std::vector<Graph> connected_graphs(int n, int threads = 0);

// Every class on n vertices, disconnected ones included, assembled as
// multisets of connected components.
std::vector<Graph> all_graphs(int n, int threads = 0);

// Staged exact test for (chi, gamma, psi) == t, cheapest rejections first.
bool matches_invariants(const Graph& g, const Triple& t);

struct MinOrderVerification {
    Triple target;
    int formula = 0;
    int search_min = -1;          // least order carrying a realizer; -1 if none up to formula
    std::vector<Graph> realizers; // classes at search_min, sorted by canonical form

    bool agrees() const { return search_min == formula; }
};

// Searches orders 1..min_order(t) for graphs realizing t and reports whether
// the first hit lands exactly on the formula.
MinOrderVerification verify_min_order(const Triple& t, int threads = 0);

struct HOptimalScan {
    int h = 0;
    std::vector<Graph> graphs;       // realizers of (3, 3, h) on 2h-2 vertices, canonical order
    long long classes_scanned = 0;
    long long rejected_sampled = 0;  // rejected classes re-solved from scratch as a spot check
    long long sample_mismatches = 0; // must stay 0
};

// All connected classes with chi = gamma = 3, psi = h on 2h - 2 vertices.
// Supported for h in {4, 5, 6}; h = 6 scans the full 10-vertex catalogue.
HOptimalScan h_optimal_graphs(int h, int threads = 0);

// A vertex set inducing K_{theta,theta} minus a perfect matching, if one
// exists; the search order is deterministic (ascending stable side first).
std::optional<VertexSet> find_induced_reduced(const Graph& g, int theta);

struct StructureReport {
    enum class PairType { p4, k3, neither };

    bool precondition_ok = false;     // chi = gamma = 3, psi = h, n = 2h - 2
    std::string precondition_failure; // empty when ok
    int h = 0;
    VertexSet singletons;             // union of the one-vertex classes
    std::vector<VertexSet> pairs;     // two-vertex classes, by least vertex
    std::vector<PairType> pair_types; // shape of each pair + singletons subgraph
    std::vector<int> j_pairs;         // pairs holding a vertex isolated among the pairs
    std::vector<int> t_pairs;
    VertexSet isolated_vertices;
    VertexSet couples;                // partners of the isolated vertices
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const {
        if (checks.empty()) return false;
        for (const auto& entry : checks)
            if (!entry.second) return false;
        return true;
    }
};

// Decomposes a complete coloring of an extremal host: two singleton classes,
// h - 2 pairs, and the forced shape of the subgraph the pairs induce.
StructureReport structure_report(const Graph& g, const Coloring& c);

} // namespace trichrome
