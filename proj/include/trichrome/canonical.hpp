#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trichrome/graph.hpp"

namespace trichrome {

inline constexpr int kMaxCanonicalVertices = 16;

// Isomorphism-invariant key: order byte followed by the upper triangle of
// the canonically relabeled adjacency matrix (column order, packed MSB
// first). Equal forms iff isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }

    std::string to_hex() const;
};

CanonicalForm canonical_form(const Graph& g);

// Same search started from the partition ({mark}, rest). Two vertices get
// equal marked forms iff some automorphism maps one to the other.
CanonicalForm canonical_form_marked(const Graph& g, int mark);

bool are_isomorphic(const Graph& g, const Graph& h);

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : f.bytes) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace trichrome
