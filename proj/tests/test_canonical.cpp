#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "trichrome/canonical.hpp"
#include "trichrome/graph.hpp"

using namespace trichrome;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v))
                out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
    }
}

TEST_CASE("isomorphism agrees with permutation search on all graphs up to 5 vertices") {
    for (int n = 2; n <= 5; ++n) {
        auto catalog = oracles::all_labeled_graphs(n);
        // Sampling every pair is quadratic in 2^C(n,2); thin the list for n=5.
        std::size_t step = n == 5 ? 37 : 1;
        for (std::size_t i = 0; i < catalog.size(); i += step)
            for (std::size_t j = i; j < catalog.size(); j += step) {
                const bool fast = are_isomorphic(catalog[i], catalog[j]);
                const bool slow = oracles::isomorphic_by_permutation(catalog[i], catalog[j]);
                REQUIRE(fast == slow);
            }
    }
}

TEST_CASE("number of isomorphism classes on four vertices") {
    std::set<CanonicalForm> classes;
    for (const Graph& g : oracles::all_labeled_graphs(4)) classes.insert(canonical_form(g));
    CHECK(classes.size() == 11);
}

TEST_CASE("marked forms separate orbits") {
    // P_4: ends {0,3} form one orbit, middles {1,2} the other.
    Graph p4 = path_graph(4);
    CHECK(canonical_form_marked(p4, 0) == canonical_form_marked(p4, 3));
    CHECK(canonical_form_marked(p4, 1) == canonical_form_marked(p4, 2));
    CHECK_FALSE(canonical_form_marked(p4, 0) == canonical_form_marked(p4, 1));

    // Star K_{1,3}: center alone.
    Graph star = complete_bipartite(1, 3);
    CHECK(canonical_form_marked(star, 1) == canonical_form_marked(star, 2));
    CHECK(canonical_form_marked(star, 1) == canonical_form_marked(star, 3));
    CHECK_FALSE(canonical_form_marked(star, 0) == canonical_form_marked(star, 1));

    // Vertex-transitive graph: every mark equivalent.
    Graph c5 = cycle_graph(5);
    for (int v = 1; v < 5; ++v)
        CHECK(canonical_form_marked(c5, 0) == canonical_form_marked(c5, v));
}

TEST_CASE("non-isomorphic graphs with equal degree sequences split") {
    // C_6 versus two triangles: both 2-regular on 6 vertices.
    Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
    // K_{3,3} versus the prism (C_6 with long chords is 3-regular too).
    Graph prism(6);
    for (int i = 0; i < 3; ++i) {
        prism.add_edge(i, (i + 1) % 3);
        prism.add_edge(i + 3, (i + 1) % 3 + 3);
        prism.add_edge(i, i + 3);
    }
    CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3), prism));
    CHECK(are_isomorphic(prism, prism));
}

TEST_CASE("hex form and hash are stable per class") {
    CanonicalForm a = canonical_form(cycle_graph(5));
    CanonicalForm b = canonical_form(permuted(cycle_graph(5), {3, 1, 4, 0, 2}));
    CHECK(a.to_hex() == b.to_hex());
    CHECK(CanonicalFormHash{}(a) == CanonicalFormHash{}(b));
    CHECK_FALSE(a.to_hex().empty());
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(canonical_form(empty_graph(kMaxCanonicalVertices + 1)), capacity_error);
}
