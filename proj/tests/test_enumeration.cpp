#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "trichrome/canonical.hpp"
#include "trichrome/constructions.hpp"
#include "trichrome/enumeration.hpp"
#include "trichrome/errors.hpp"
#include "trichrome/graph.hpp"

using namespace trichrome;

TEST_CASE("connected class counts match the published sequence") {
    const long long want[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        long long seen = 0;
        long long total = for_each_connected_graph(n, 0, [&](const Graph& g, const CanonicalForm& f) {
            ++seen;
            CHECK(g.n == n);
            CHECK(f.n == n);
            CHECK(is_connected(g));
        });
        CHECK(total == want[n]);
        CHECK(seen == want[n]);
    }
}

TEST_CASE("enumerated classes are exactly the connected classes of the labeled census") {
    for (int n = 1; n <= 6; ++n) {
        std::set<CanonicalForm> want;
        for (const Graph& g : oracles::all_labeled_graphs(n))
            if (is_connected(g)) want.insert(canonical_form(g));
        std::set<CanonicalForm> got;
        for (const Graph& g : connected_graphs(n)) {
            auto [it, fresh] = got.insert(canonical_form(g));
            CHECK(fresh); // no duplicate classes
        }
        CHECK(got == want);
    }
}

TEST_CASE("stream order does not depend on the thread count") {
    for (int n : {6, 7}) {
        std::vector<CanonicalForm> single, multi;
        for_each_connected_graph(n, 1, [&](const Graph&, const CanonicalForm& f) {
            single.push_back(f);
        });
        for_each_connected_graph(n, 4, [&](const Graph&, const CanonicalForm& f) {
            multi.push_back(f);
        });
        CHECK(single == multi);
    }
}

TEST_CASE("keep filter runs before materialization and the return value ignores it") {
    long long want = 0;
    for (const Graph& g : connected_graphs(6))
        if (g.edge_count() == 6) ++want;
    long long kept = 0;
    long long total = for_each_connected_graph(
        6, 0, [](const Graph& g, const CanonicalForm&) { return g.edge_count() == 6; },
        [&](const Graph& g, const CanonicalForm&) {
            ++kept;
            CHECK(g.edge_count() == 6);
        });
    CHECK(total == 112);
    CHECK(kept == want);
    CHECK(kept > 0);
}

TEST_CASE("full catalogue composes connected parts") {
    const std::size_t want[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        auto catalog = all_graphs(n);
        CHECK(catalog.size() == want[n]);
        std::set<CanonicalForm> classes;
        for (const Graph& g : catalog) {
            CHECK(g.n == n);
            classes.insert(canonical_form(g));
        }
        CHECK(classes.size() == catalog.size());
    }
    // Cross-check against the labeled census for small n.
    for (int n = 1; n <= 5; ++n) {
        std::set<CanonicalForm> want_forms;
        for (const Graph& g : oracles::all_labeled_graphs(n)) want_forms.insert(canonical_form(g));
        std::set<CanonicalForm> got;
        for (const Graph& g : all_graphs(n)) got.insert(canonical_form(g));
        CHECK(got == want_forms);
    }
}

TEST_CASE("enumeration capacity guards") {
    CHECK_THROWS_AS(for_each_connected_graph(11, 0, [](const Graph&, const CanonicalForm&) {}),
                    capacity_error);
    CHECK_THROWS_AS(for_each_connected_graph(0, 0, [](const Graph&, const CanonicalForm&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(connected_graphs(10), capacity_error);
    CHECK_THROWS_AS(all_graphs(9), capacity_error);
}

TEST_CASE("staged invariant test agrees with full analysis") {
    for (const Graph& g : connected_graphs(6)) {
        auto report = analyze(g);
        for (Triple t : {Triple{3, 3, 4}, Triple{2, 3, 4}, Triple{3, 4, 4}, Triple{2, 2, 2}})
            CHECK(matches_invariants(g, t) == report.matches(t.f, t.g, t.h));
    }
}

TEST_CASE("minimum order search confirms the formula on small triples") {
    auto p4_check = verify_min_order({2, 3, 3});
    CHECK(p4_check.formula == 4);
    CHECK(p4_check.search_min == 4);
    CHECK(p4_check.agrees());
    REQUIRE(p4_check.realizers.size() == 1); // only the path realizes (2,3,3) on 4 vertices
    CHECK(are_isomorphic(p4_check.realizers.front(), path_graph(4)));

    auto k3_check = verify_min_order({3, 3, 3});
    CHECK(k3_check.formula == 3);
    CHECK(k3_check.agrees());

    auto eight = verify_min_order({5, 5, 6});
    CHECK(eight.formula == 8);
    CHECK(eight.agrees());
    CHECK_FALSE(eight.realizers.empty());
    for (const Graph& g : eight.realizers) CHECK(analyze(g).matches(5, 5, 6));
    for (std::size_t i = 1; i < eight.realizers.size(); ++i)
        CHECK(canonical_form(eight.realizers[i - 1]) < canonical_form(eight.realizers[i]));

    CHECK_THROWS_AS(verify_min_order({2, 2, 3}), std::domain_error);
    CHECK_THROWS_AS(verify_min_order({2, 4, 7}), capacity_error); // formula order 12
}

TEST_CASE("extremal scan at the smallest supported size") {
    auto scan = h_optimal_graphs(4);
    CHECK(scan.h == 4);
    CHECK(scan.graphs.size() == 7);
    CHECK(scan.classes_scanned == 112);
    CHECK(scan.sample_mismatches == 0);
    for (const Graph& g : scan.graphs) {
        CHECK(g.n == 6);
        CHECK(analyze(g).matches(3, 3, 4));
    }
    for (std::size_t i = 1; i < scan.graphs.size(); ++i)
        CHECK(canonical_form(scan.graphs[i - 1]) < canonical_form(scan.graphs[i]));
    // Both apex variants appear among the seven.
    std::set<CanonicalForm> forms;
    for (const Graph& g : scan.graphs) forms.insert(canonical_form(g));
    CHECK(forms.count(canonical_form(l_graph(4, 1))) == 1);
    CHECK(forms.count(canonical_form(l_graph(4, 2))) == 1);

    CHECK_THROWS_AS(h_optimal_graphs(3), capacity_error);
    CHECK_THROWS_AS(h_optimal_graphs(7), capacity_error);
}

TEST_CASE("induced matching-free biclique search") {
    for (int theta = 1; theta <= 4; ++theta) {
        auto hit = find_induced_reduced(reduced_graph(theta), theta);
        REQUIRE(hit.has_value());
        CHECK(hit->count() == 2 * theta);
    }

    // C_6 is exactly the theta = 3 graph, and contains the theta = 2 one (2K_2).
    CHECK(find_induced_reduced(cycle_graph(6), 3).has_value());
    auto two = find_induced_reduced(cycle_graph(6), 2);
    REQUIRE(two.has_value());
    Graph sub = induced_subgraph(cycle_graph(6), *two);
    CHECK(are_isomorphic(sub, reduced_graph(2)));

    // K_{3,3} has the matching edges present, so no induced copy.
    CHECK_FALSE(find_induced_reduced(complete_bipartite(3, 3), 3).has_value());
    CHECK_FALSE(find_induced_reduced(complete_graph(6), 2).has_value());
    CHECK_FALSE(find_induced_reduced(path_graph(3), 2).has_value()); // too few vertices

    CHECK_THROWS_AS(find_induced_reduced(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("decomposition of a complete coloring of an extremal host") {
    Graph host = l_graph(6, 1);
    Coloring witness = achromatic_witness_l(6, 1);
    auto report = structure_report(host, witness);
    CHECK(report.precondition_ok);
    CHECK(report.h == 6);
    CHECK(report.singletons.count() == 2);
    CHECK(report.pairs.size() == 4);
    CHECK(report.j_pairs.size() == 2);
    CHECK(report.t_pairs.size() == 2);
    CHECK(report.isolated_vertices.count() == 2);
    CHECK(report.couples.count() == 2);
    CHECK(report.all_checks_pass());
    // q_1 and q_2 are the singleton classes.
    CHECK(report.singletons.contains(8));
    CHECK(report.singletons.contains(9));

    // Pair types: {u_i, w_i} plus the apexes is a path or holds a triangle.
    int p4_count = 0, k3_count = 0;
    for (auto type : report.pair_types) {
        if (type == StructureReport::PairType::p4) ++p4_count;
        if (type == StructureReport::PairType::k3) ++k3_count;
    }
    CHECK(p4_count + k3_count == 4);
    CHECK(k3_count == 2); // variant 1 has both q1w1 and q2u4 triangles
}

TEST_CASE("decomposition across every extremal witness at h = 4") {
    auto scan = h_optimal_graphs(4);
    for (const Graph& g : scan.graphs)
        for (const Coloring& c : all_complete_colorings(g, 4)) {
            auto report = structure_report(g, c);
            CHECK(report.precondition_ok);
            CHECK(report.all_checks_pass());
        }
}

TEST_CASE("decomposition preconditions and input validation") {
    // K_4 with its proper 4-coloring: wrong invariants for the decomposition.
    Graph k4 = complete_graph(4);
    auto coloring = achromatic_number(k4).witness;
    auto report = structure_report(k4, coloring);
    CHECK_FALSE(report.precondition_ok);
    CHECK_FALSE(report.precondition_failure.empty());
    CHECK_FALSE(report.all_checks_pass());

    // P_4's proper 2-coloring is complete, but two classes are too few.
    Graph p4 = path_graph(4);
    auto small = structure_report(p4, Coloring{p4, {1, 2, 1, 2}, 2});
    CHECK_FALSE(small.precondition_ok);

    // Mismatched host and improper colorings are rejected outright.
    CHECK_THROWS_AS(structure_report(k4, Coloring{p4, {1, 2, 3, 1}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(structure_report(p4, Coloring{p4, {1, 1, 2, 2}, 2}), std::invalid_argument);
}
