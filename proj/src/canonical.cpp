#include "trichrome/canonical.hpp"

#include <algorithm>
#include <array>

namespace trichrome {

std::string CanonicalForm::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

namespace {

using Cells = std::vector<std::uint64_t>; // ordered partition, one mask per cell
using Perm = std::array<std::uint8_t, kMaxCanonicalVertices>;

// Equitable refinement: split every cell by neighbor counts into each other
// cell, subcells ordered by ascending count, until stable. Depends only on
// counts, so it commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size(); ++w) {
            const std::uint64_t splitter = cells[w];
            for (std::size_t x = 0; x < cells.size(); ++x) {
                if (std::popcount(cells[x]) <= 1) continue;
                std::array<std::uint64_t, kMaxCanonicalVertices + 1> groups{};
                int max_count = -1, min_count = kMaxCanonicalVertices + 1;
                for (std::uint64_t b = cells[x]; b; b &= b - 1) {
                    const int v = std::countr_zero(b);
                    const int cnt = std::popcount(g.adj[static_cast<std::size_t>(v)] & splitter);
                    groups[static_cast<std::size_t>(cnt)] |= 1ull << v;
                    max_count = std::max(max_count, cnt);
                    min_count = std::min(min_count, cnt);
                }
                if (min_count == max_count) continue;
                Cells replacement;
                replacement.reserve(static_cast<std::size_t>(max_count - min_count) + 1);
                for (int c = min_count; c <= max_count; ++c)
                    if (groups[static_cast<std::size_t>(c)])
                        replacement.push_back(groups[static_cast<std::size_t>(c)]);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), replacement.begin(),
                             replacement.end());
                changed = true;
                if (w >= x) w += replacement.size() - 1; // keep splitter index valid
            }
        }
    }
}

std::vector<std::uint8_t> leaf_bytes(const Graph& g, const Perm& order) {
    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(g.n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) |
                  (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1 : 0);
            if (++nbits == 8) {
                bytes.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return bytes;
}

struct CanonicalSearch {
    const Graph& g;
    std::vector<std::uint8_t> best;
    Perm best_order{};
    bool have_best = false;
    std::vector<Perm> automorphisms;

    explicit CanonicalSearch(const Graph& graph) : g(graph) {}

    void descend(Cells cells, std::uint64_t prefix_fixed, const std::vector<int>& prefix) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            Perm order{};
            for (std::size_t i = 0; i < cells.size(); ++i)
                order[i] = static_cast<std::uint8_t>(std::countr_zero(cells[i]));
            auto bytes = leaf_bytes(g, order);
            if (!have_best || bytes < best) {
                best = std::move(bytes);
                best_order = order;
                have_best = true;
            } else if (bytes == best) {
                // equal leaf strings witness an automorphism
                Perm gamma{};
                for (int i = 0; i < g.n; ++i)
                    gamma[order[static_cast<std::size_t>(i)]] = best_order[static_cast<std::size_t>(i)];
                automorphisms.push_back(gamma);
            }
            return;
        }

        std::uint64_t processed = 0;
        for (std::uint64_t b = cells[target]; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            if (processed && in_processed_orbit(v, processed, prefix_fixed)) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(1ull << v);
            child.push_back(cells[target] & ~(1ull << v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            auto child_prefix = prefix;
            child_prefix.push_back(v);
            descend(std::move(child), prefix_fixed | (1ull << v), child_prefix);
            processed |= 1ull << v;
        }
    }

    // Orbit closure of the processed candidates under discovered
    // automorphisms that fix every individualized vertex; skipping v when it
    // lands in the closure explores an equivalent subtree.
    bool in_processed_orbit(int v, std::uint64_t processed, std::uint64_t prefix_fixed) const {
        std::uint64_t closure = processed;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& gamma : automorphisms) {
                bool fixes_prefix = true;
                for (std::uint64_t b = prefix_fixed; b; b &= b - 1) {
                    const int u = std::countr_zero(b);
                    if (gamma[static_cast<std::size_t>(u)] != u) {
                        fixes_prefix = false;
                        break;
                    }
                }
                if (!fixes_prefix) continue;
                std::uint64_t image = 0;
                for (std::uint64_t b = closure; b; b &= b - 1)
                    image |= 1ull << gamma[static_cast<std::size_t>(std::countr_zero(b))];
                if (image & ~closure) {
                    closure |= image;
                    grew = true;
                }
                if ((closure >> v) & 1) return true;
            }
        }
        return (closure >> v) & 1;
    }
};

CanonicalForm run_search(const Graph& g, Cells initial) {
    if (g.n > kMaxCanonicalVertices)
        throw capacity_error("canonical form supports at most 16 vertices");
    CanonicalForm form;
    form.n = g.n;
    if (g.n == 0) {
        form.bytes = {0};
        return form;
    }
    CanonicalSearch search(g);
    search.descend(std::move(initial), 0, {});
    form.bytes = std::move(search.best);
    return form;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    Cells cells;
    if (g.n > 0) cells.push_back(VertexSet::full(g.n).bits);
    return run_search(g, std::move(cells));
}

CanonicalForm canonical_form_marked(const Graph& g, int mark) {
    if (mark < 0 || mark >= g.n) throw std::invalid_argument("mark out of range");
    Cells cells;
    cells.push_back(1ull << mark);
    const std::uint64_t rest = VertexSet::full(g.n).bits & ~(1ull << mark);
    if (rest) cells.push_back(rest);
    return run_search(g, std::move(cells));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace trichrome
