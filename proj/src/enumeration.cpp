#include "trichrome/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "trichrome/parallel.hpp"

namespace trichrome {

namespace {

// (degree, sorted neighbor degrees): cheap invariant that separates most
// vertices before the marked canonical form has to run.
using CheapKey = std::pair<int, std::vector<int>>;

CheapKey cheap_key(const Graph& g, int v) {
    std::vector<int> around;
    around.reserve(static_cast<std::size_t>(g.degree(v)));
    for (std::uint64_t b = g.adj[static_cast<std::size_t>(v)]; b; b &= b - 1)
        around.push_back(g.degree(std::countr_zero(b)));
    std::sort(around.begin(), around.end());
    return {g.degree(v), std::move(around)};
}

// Canonical augmentation acceptance: keep the child iff its newest vertex
// minimizes (cheap key, marked canonical form) over the non-cut vertices.
// Vertices with equal marked forms lie in one orbit, so the deletion point
// is well defined per class and every class survives from exactly one
// parent class.
bool accept_child(const Graph& child) {
    const int v = child.n - 1;
    const VertexSet cuts = cut_vertices(child);
    const CheapKey mine = cheap_key(child, v);
    std::vector<int> ties;
    for (int x = 0; x < v; ++x) {
        if (cuts.contains(x)) continue;
        const CheapKey other = cheap_key(child, x);
        if (other < mine) return false;
        if (other == mine) ties.push_back(x);
    }
    if (ties.empty()) return true;
    const CanonicalForm marked = canonical_form_marked(child, v);
    for (int x : ties)
        if (canonical_form_marked(child, x) < marked) return false;
    return true;
}

struct Child {
    Graph g;
    CanonicalForm form;
};

// All accepted one-vertex extensions of parent, deduplicated to one labeled
// representative per class and sorted by canonical form.
void extend_parent(const Graph& parent, std::vector<Child>& out) {
    out.clear();
    const int n = parent.n;
    Graph child(n + 1);
    const std::uint64_t top = 1ull << n;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        for (int u = 0; u < n; ++u)
            child.adj[static_cast<std::size_t>(u)] =
                parent.adj[static_cast<std::size_t>(u)] | (((mask >> u) & 1) << n);
        child.adj[static_cast<std::size_t>(n)] = mask;
        if (!accept_child(child)) continue;
        out.push_back({child, canonical_form(child)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Child& a, const Child& b) { return a.form < b.form; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Child& a, const Child& b) { return a.form == b.form; }),
              out.end());
}

// Extends a whole level chunk by chunk: extension and `keep` run on worker
// threads, survivors reach `visit` on the calling thread in parent-then-form
// order. Returns the class count before filtering.
long long process_level(const std::vector<Graph>& parents, int threads,
                        const std::function<bool(const Graph&, const CanonicalForm&)>& keep,
                        const std::function<void(const Graph&, const CanonicalForm&)>& visit) {
    constexpr std::size_t kChunk = 2048;
    long long total = 0;
    std::vector<std::pair<long long, std::vector<Child>>> slots;
    for (std::size_t base = 0; base < parents.size(); base += kChunk) {
        const std::size_t width = std::min(kChunk, parents.size() - base);
        slots.assign(width, {});
        parallel_chunks(width, threads, [&](std::size_t lo, std::size_t hi) {
            std::vector<Child> scratch;
            for (std::size_t i = lo; i < hi; ++i) {
                extend_parent(parents[base + i], scratch);
                auto& slot = slots[i];
                slot.first = static_cast<long long>(scratch.size());
                for (Child& c : scratch)
                    if (keep(c.g, c.form)) slot.second.push_back(std::move(c));
            }
        });
        for (const auto& slot : slots) {
            total += slot.first;
            for (const Child& c : slot.second) visit(c.g, c.form);
        }
    }
    return total;
}

std::vector<Graph> grow_level(const std::vector<Graph>& parents, int threads) {
    std::vector<Graph> next;
    process_level(
        parents, threads, [](const Graph&, const CanonicalForm&) { return true; },
        [&next](const Graph& g, const CanonicalForm&) { next.push_back(g); });
    return next;
}

} // namespace

long long for_each_connected_graph(
    int n, int threads, const std::function<bool(const Graph&, const CanonicalForm&)>& keep,
    const std::function<void(const Graph&, const CanonicalForm&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
    if (n > kEnumerationBudget)
        throw capacity_error("connected enumeration limited to 10 vertices");
    const int workers = effective_threads(threads);
    const Graph k1(1);
    if (n == 1) {
        const CanonicalForm form = canonical_form(k1);
        if (keep(k1, form)) visit(k1, form);
        return 1;
    }
    std::vector<Graph> level{k1};
    for (int size = 2; size < n; ++size) level = grow_level(level, workers);
    return process_level(level, workers, keep, visit);
}

long long for_each_connected_graph(
    int n, int threads, const std::function<void(const Graph&, const CanonicalForm&)>& visit) {
    return for_each_connected_graph(
        n, threads, [](const Graph&, const CanonicalForm&) { return true; }, visit);
}

std::vector<Graph> connected_graphs(int n, int threads) {
    if (n > 9) throw capacity_error("materialized enumeration limited to 9 vertices");
    std::vector<Graph> out;
    for_each_connected_graph(
        n, threads, [&out](const Graph& g, const CanonicalForm&) { out.push_back(g); });
    return out;
}

std::vector<Graph> all_graphs(int n, int threads) {
    if (n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
    if (n > 8) throw capacity_error("full catalogue limited to 8 vertices");
    std::vector<std::vector<Graph>> connected(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s)
        connected[static_cast<std::size_t>(s)] = connected_graphs(s, threads);
    std::vector<Graph> out;
    // Components picked with nonincreasing (size, catalogue index), so each
    // multiset of classes is assembled exactly once.
    std::function<void(int, int, int, const Graph&)> assemble = [&](int remaining, int max_size,
                                                                    int max_index,
                                                                    const Graph& acc) {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (int s = std::min(remaining, max_size); s >= 1; --s) {
            const auto& pool = connected[static_cast<std::size_t>(s)];
            const int start = s == max_size ? max_index : static_cast<int>(pool.size()) - 1;
            for (int i = start; i >= 0; --i) {
                const Graph& part = pool[static_cast<std::size_t>(i)];
                assemble(remaining - s, s, i, acc.n == 0 ? part : disjoint_union(acc, part));
            }
        }
    };
    assemble(n, n, static_cast<int>(connected[static_cast<std::size_t>(n)].size()) - 1, Graph());
    return out;
}

namespace {

// Gamma >= 3 is the failure of the complete-bipartite-components test;
// Gamma <= 3 holds iff every maximal stable set removal lands back in it.
bool grundy_is_three(const Graph& g) {
    if (has_property_pi(g)) return false;
    for (const VertexSet s : maximal_stable_sets(g)) {
        const VertexSet rest = g.vertices() - s;
        if (rest.empty()) continue;
        if (!has_property_pi(induced_subgraph(g, rest))) return false;
    }
    return true;
}

} // namespace

bool matches_invariants(const Graph& g, const Triple& t) {
    if (g.n < 1) return false;
    if (g.edge_count() < t.h * (t.h - 1) / 2) return false; // complete h-coloring joins all pairs
    const int omega = clique_number(g);
    if (omega > t.f) return false;             // omega <= chi
    if ((g.n + omega) / 2 < t.h) return false; // singleton classes force psi <= (n + omega)/2
    if (!properly_colorable(g, t.f)) return false;
    if (t.f > 1 && properly_colorable(g, t.f - 1)) return false;
    if (t.g == 3) {
        if (!grundy_is_three(g)) return false;
    } else if (grundy_number(g).value != t.g) {
        return false;
    }
    return achromatic_number(g).value == t.h;
}

MinOrderVerification verify_min_order(const Triple& t, int threads) {
    if (!is_realizable(t)) throw std::domain_error("triple is not realizable");
    MinOrderVerification result;
    result.target = t;
    result.formula = min_order(t);
    if (result.formula > kEnumerationBudget)
        throw capacity_error("minimum-order search limited to 10 vertices");
    for (int n = 1; n <= result.formula && result.search_min < 0; ++n) {
        std::vector<std::pair<CanonicalForm, Graph>> found;
        for_each_connected_graph(
            n, threads,
            [&t](const Graph& g, const CanonicalForm&) { return matches_invariants(g, t); },
            [&found](const Graph& g, const CanonicalForm& form) { found.emplace_back(form, g); });
        if (found.empty()) continue;
        result.search_min = n;
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        result.realizers.reserve(found.size());
        for (auto& entry : found) result.realizers.push_back(std::move(entry.second));
    }
    return result;
}

namespace {

// Exact staged test for chi = gamma = 3, psi = h on a 2h-2 vertex graph:
// chi = 3 is non-bipartite plus 3-colorable, gamma = 3 by the stable-set
// recursion, and with omega <= 3 on 2h-2 vertices psi cannot exceed h, so
// psi = h reduces to one complete-coloring search.
bool h_optimal_filter(const Graph& g, int h) {
    if (g.edge_count() < h * (h - 1) / 2) return false;
    if (clique_number(g) > 3) return false;
    if (is_bipartite(g)) return false;
    if (!properly_colorable(g, 3)) return false;
    if (!grundy_is_three(g)) return false;
    return complete_coloring_with(g, h).has_value();
}

} // namespace

HOptimalScan h_optimal_graphs(int h, int threads) {
    if (h < 4 || h > 6) throw capacity_error("h-optimal scan supports h = 4, 5, 6");
    HOptimalScan scan;
    scan.h = h;
    std::atomic<long long> sampled{0};
    std::atomic<long long> mismatches{0};
    std::vector<std::pair<CanonicalForm, Graph>> found;
    scan.classes_scanned = for_each_connected_graph(
        2 * h - 2, threads,
        [&](const Graph& g, const CanonicalForm& form) {
            if (h_optimal_filter(g, h)) return true;
            // Deterministic 1-in-128 audit of rejections via the plain solvers.
            if (CanonicalFormHash{}(form) % 128 == 0) {
                sampled.fetch_add(1, std::memory_order_relaxed);
                const InvariantReport full = analyze(g);
                if (full.chi == 3 && full.gamma == 3 && full.psi == h)
                    mismatches.fetch_add(1, std::memory_order_relaxed);
            }
            return false;
        },
        [&found](const Graph& g, const CanonicalForm& form) { found.emplace_back(form, g); });
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    scan.graphs.reserve(found.size());
    for (auto& entry : found) scan.graphs.push_back(std::move(entry.second));
    scan.rejected_sampled = sampled.load();
    scan.sample_mismatches = mismatches.load();
    return scan;
}

std::optional<VertexSet> find_induced_reduced(const Graph& g, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    if (2 * theta > g.n) return std::nullopt;
    // Pick the stable side A in ascending order, then match partners: b_i
    // adjacent to every a_j except a_i, with B stable. Each candidate fits
    // one slot only, so the matching never reuses a vertex.
    std::vector<int> a;
    std::uint64_t a_mask = 0;
    std::optional<VertexSet> hit;

    auto match_partners = [&]() -> bool {
        std::vector<std::vector<int>> slot(static_cast<std::size_t>(theta));
        for (int x = 0; x < g.n; ++x) {
            if ((a_mask >> x) & 1) continue;
            int missing = -1;
            bool fits = true;
            for (int i = 0; i < theta && fits; ++i) {
                if (g.adjacent(a[static_cast<std::size_t>(i)], x)) continue;
                if (missing >= 0) fits = false;
                else missing = i;
            }
            if (fits && missing >= 0) slot[static_cast<std::size_t>(missing)].push_back(x);
        }
        for (const auto& candidates : slot)
            if (candidates.empty()) return false;
        std::function<bool(int, std::uint64_t)> place = [&](int i, std::uint64_t chosen) {
            if (i == theta) {
                hit = VertexSet(a_mask | chosen);
                return true;
            }
            for (int x : slot[static_cast<std::size_t>(i)]) {
                if (g.adj[static_cast<std::size_t>(x)] & chosen) continue;
                if (place(i + 1, chosen | (1ull << x))) return true;
            }
            return false;
        };
        return place(0, 0);
    };

    std::function<bool(int)> choose = [&](int start) {
        if (static_cast<int>(a.size()) == theta) return match_partners();
        for (int v = start; v < g.n; ++v) {
            if (g.adj[static_cast<std::size_t>(v)] & a_mask) continue;
            a.push_back(v);
            a_mask |= 1ull << v;
            if (choose(v + 1)) return true;
            a_mask &= ~(1ull << v);
            a.pop_back();
        }
        return false;
    };
    choose(0);
    return hit;
}

namespace {

bool is_path4(const Graph& g) {
    if (g.n != 4 || g.edge_count() != 3 || !is_connected(g)) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool has_triangle(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        const std::uint64_t above = g.adj[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1);
        for (std::uint64_t b = above; b; b &= b - 1) {
            const int u = std::countr_zero(b);
            if (g.adj[static_cast<std::size_t>(v)] & g.adj[static_cast<std::size_t>(u)])
                return true;
        }
    }
    return false;
}

bool has_induced_2k2(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
                continue;
            return true;
        }
    return false;
}

} // namespace

StructureReport structure_report(const Graph& g, const Coloring& c) {
    if (!(c.host == g)) throw std::invalid_argument("coloring does not belong to this graph");
    if (!is_complete(c)) throw std::invalid_argument("coloring is not complete");
    StructureReport report;
    report.h = c.k;

    if (c.k < 4)
        report.precondition_failure = "needs at least 4 classes";
    else if (g.n != 2 * c.k - 2)
        report.precondition_failure = "order differs from 2h-2";
    else {
        const InvariantReport inv = analyze(g);
        if (inv.chi != 3 || inv.gamma != 3 || inv.psi != c.k)
            report.precondition_failure = "invariants differ from (3, 3, h)";
    }
    report.precondition_ok = report.precondition_failure.empty();

    VertexSet singles;
    bool shapes_ok = true;
    for (int color = 1; color <= c.k; ++color) {
        const VertexSet cls = c.color_class(color);
        if (cls.count() == 1) singles = singles | cls;
        else if (cls.count() == 2) report.pairs.push_back(cls);
        else shapes_ok = false;
    }
    shapes_ok = shapes_ok && singles.count() == 2 &&
                static_cast<int>(report.pairs.size()) == c.k - 2;
    std::sort(report.pairs.begin(), report.pairs.end(), set_list_less);
    report.singletons = singles;
    report.checks.emplace_back("two-singletons-rest-pairs", shapes_ok);
    if (!shapes_ok) return report; // the remaining checks need the class shapes

    const VertexSet m_set = g.vertices() - singles;

    bool f_ok = true;
    for (const VertexSet& pair : report.pairs) {
        const Graph f_i = induced_subgraph(g, pair | singles);
        StructureReport::PairType type = StructureReport::PairType::neither;
        if (is_path4(f_i)) type = StructureReport::PairType::p4;
        else if (has_triangle(f_i)) type = StructureReport::PairType::k3;
        else f_ok = false;
        report.pair_types.push_back(type);
    }
    report.checks.emplace_back("pair-plus-singletons-p4-or-triangle", f_ok);

    bool cross_ok = true;
    for (std::size_t i = 0; i < report.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < report.pairs.size(); ++j) {
            int crossing = 0;
            for (int u : report.pairs[i].to_vector())
                crossing += (g.neighbors(u) & report.pairs[j]).count();
            if (crossing != 1) cross_ok = false;
        }
    report.checks.emplace_back("one-edge-between-pairs", cross_ok);

    // A pair vertex forming a triangle with both singletons must have no
    // neighbor among the pairs.
    bool apex_ok = true;
    const int phi1 = singles.lowest();
    const int phi2 = (singles - VertexSet::single(phi1)).lowest();
    if (g.adjacent(phi1, phi2)) {
        for (int v : m_set.to_vector())
            if (g.adjacent(v, phi1) && g.adjacent(v, phi2) && !(g.neighbors(v) & m_set).empty())
                apex_ok = false;
    }
    report.checks.emplace_back("triangle-apex-isolated-among-pairs", apex_ok);

    for (int v : m_set.to_vector())
        if ((g.neighbors(v) & m_set).empty()) report.isolated_vertices.add(v);
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        if ((report.pairs[i] & report.isolated_vertices).empty())
            report.t_pairs.push_back(static_cast<int>(i));
        else
            report.j_pairs.push_back(static_cast<int>(i));
    }
    for (int v : report.isolated_vertices.to_vector())
        for (const VertexSet& pair : report.pairs)
            if (pair.contains(v)) report.couples = report.couples | (pair - VertexSet::single(v));
    report.checks.emplace_back("exactly-two-pairs-with-isolated-vertex",
                               report.j_pairs.size() == 2);

    VertexSet t_set;
    for (int i : report.t_pairs) t_set = t_set | report.pairs[static_cast<std::size_t>(i)];
    const int tau = static_cast<int>(report.t_pairs.size());
    const Graph t_graph = induced_subgraph(g, t_set);
    report.checks.emplace_back("pair-core-bipartite",
                               t_set.empty() || is_bipartite(t_graph).has_value());
    report.checks.emplace_back("pair-core-2k2-free", t_set.empty() || !has_induced_2k2(t_graph));
    bool staircase;
    if (tau == 0) staircase = true;
    else if (tau == 1) staircase = t_graph.edge_count() == 0;
    else if (2 * tau <= kMaxCanonicalVertices)
        staircase = are_isomorphic(t_graph, extended_graph(tau));
    else
        staircase = false;
    report.checks.emplace_back("pair-core-staircase", staircase);
    return report;
}

} // namespace trichrome
