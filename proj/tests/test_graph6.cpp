#include "doctest.h"

#include <random>

#include "trichrome/errors.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/graph6.hpp"

using namespace trichrome;

TEST_CASE("known encodings") {
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(empty_graph(0)) == "?");
    CHECK(write_graph6(path_graph(4)) == "Ch"); // column-order bits 101001 -> 41+63
    CHECK(parse_graph6("@") == complete_graph(1));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("Ch") == path_graph(4));
}

TEST_CASE("roundtrip over random graphs up to 64 vertices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("long-form header for 63 and 64 vertices") {
    for (int n : {63, 64}) {
        Graph g = complete_bipartite(n / 2, n - n / 2);
        std::string text = write_graph6(g);
        CHECK(text[0] == '~');
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("parse errors carry an offset") {
    try {
        parse_graph6("");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 0);
    }

    // Truncated body: K_3 needs one body byte.
    try {
        parse_graph6("B");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 1);
    }

    CHECK_THROWS_AS(parse_graph6("Bw "), parse_error);      // trailing byte
    CHECK_THROWS_AS(parse_graph6("B\x01"), parse_error);    // unprintable body
    CHECK_THROWS_AS(parse_graph6("~~???"), parse_error);    // 36-bit order form
    CHECK_THROWS_AS(parse_graph6("~?B?"), parse_error);     // order 192 > 64
    CHECK_THROWS_AS(parse_graph6("A"), parse_error);        // K_2 missing body
}

TEST_CASE("padding bits must be zero") {
    // K_3 body is "w" (111 then zero padding); "x" sets a padding bit.
    CHECK_THROWS_AS(parse_graph6("Bx"), parse_error);
}
