#include "trichrome/graph6.hpp"

namespace trichrome {

std::string write_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw parse_error("graph6: unexpected end of input", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of printable range", pos);
        ++pos;
        return c - 63;
    };

    long n;
    if (!text.empty() && text[0] == '~') {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw parse_error("graph6: 36-bit orders not supported", pos);
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n > kMaxVertices)
        throw parse_error("graph6: order " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits", pos - 1);
    if (pos != text.size()) throw parse_error("graph6: trailing bytes after body", pos);
    return g;
}

} // namespace trichrome
