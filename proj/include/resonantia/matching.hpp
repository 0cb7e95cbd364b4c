#pragma once

// Maximum matching in general graphs (Edmonds' blossom algorithm), the
// Gallai-Edmonds structure read off the final alternating forest, and
// decompositions G - S into factor-critical components with S matchable to
// them.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace resonantia {

/// Simple undirected graph with sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}

    static SimpleGraph from_edges(int n, std::span<const Edge> edges) {
        SimpleGraph g(n);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    void add_edge(int u, int v) {
        if (u == v || has_edge(u, v)) return;
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    int edge_count() const {
        std::size_t d = 0;
        for (const auto& a : adj_) d += a.size();
        return static_cast<int>(d / 2);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) out.push_back({u, v});
        return out;
    }

    /// Subgraph induced by `keep` (any order); vertex i of the result is the
    /// i-th smallest kept vertex.
    SimpleGraph induced(std::span<const int> keep) const {
        std::vector<int> ids(keep.begin(), keep.end());
        std::sort(ids.begin(), ids.end());
        std::vector<int> index(order(), -1);
        for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
        SimpleGraph out(static_cast<int>(ids.size()));
        for (int i = 0; i < static_cast<int>(ids.size()); ++i)
            for (int w : adj_[ids[i]])
                if (index[w] > i) {
                    out.adj_[i].push_back(index[w]);
                    out.adj_[index[w]].push_back(i);
                }
        for (auto& a : out.adj_) std::sort(a.begin(), a.end());
        return out;
    }

    /// G - removed; vertex ids are compacted as in induced().
    SimpleGraph without(std::span<const int> removed) const {
        std::vector<char> gone(order(), 0);
        for (int v : removed) gone[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < order(); ++v)
            if (!gone[v]) keep.push_back(v);
        return induced(keep);
    }

private:
    std::vector<std::vector<int>> adj_;
};

inline SimpleGraph to_simple_graph(const FullereneGraph& g) {
    auto edges = g.edges();
    return SimpleGraph::from_edges(g.order(), edges);
}

/// Connected components restricted to vertices with alive[v] != 0, each sorted,
/// ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const SimpleGraph& g, const std::vector<char>& alive) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<std::vector<int>> components(const SimpleGraph& g) {
    return components(g, std::vector<char>(g.order(), 1));
}

/// No single vertex disconnects the graph (and it is connected). Graphs with
/// fewer than three vertices count as 2-connected only when they are K2.
inline bool is_two_connected(const SimpleGraph& g) {
    const int n = g.order();
    if (n < 2) return false;
    if (components(g).size() != 1) return false;
    if (n == 2) return true;
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) {
        alive[v] = 0;
        const bool ok = components(g, alive).size() == 1;
        alive[v] = 1;
        if (!ok) return false;
    }
    return true;
}

struct Matching {
    std::vector<int> mate;  // -1 when exposed

    int size() const {
        return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m >= 0; }) / 2);
    }
    bool is_perfect() const { return std::all_of(mate.begin(), mate.end(), [](int m) { return m >= 0; }); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < static_cast<int>(mate.size()); ++v)
            if (mate[v] > v) out.push_back({v, mate[v]});
        return out;
    }
};

/// Pairwise disjoint edges of g.
inline bool is_matching_of(const SimpleGraph& g, const Matching& m) {
    if (static_cast<int>(m.mate.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        const int w = m.mate[v];
        if (w < 0) continue;
        if (w >= g.order() || m.mate[w] != v || !g.has_edge(v, w)) return false;
    }
    return true;
}

namespace detail {

// Edmonds' blossom algorithm on the subgraph of live vertices. Vertices are
// scanned in ascending order so results are reproducible.
class BlossomSolver {
public:
    BlossomSolver(const SimpleGraph& g, const std::vector<char>& alive)
        : g_(g), alive_(alive), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), even_(n_), in_blossom_(n_),
          mark_(n_) {}

    void seed(const std::vector<int>& mate) {
        for (int v = 0; v < n_; ++v) {
            const int w = mate[v];
            if (w >= 0 && alive_[v] && alive_[w] && mate_[v] < 0 && mate_[w] < 0 && g_.has_edge(v, w)) {
                mate_[v] = w;
                mate_[w] = v;
            }
        }
    }

    void maximize() {
        for (int v = 0; v < n_; ++v)
            if (alive_[v] && mate_[v] < 0) {
                const int end = search({v});
                if (end >= 0) augment(end);
            }
    }

    const std::vector<int>& mate() const { return mate_; }

    /// After maximize(): vertices reachable from an exposed vertex by an even
    /// alternating path, i.e. the even (outer) vertices of the final forest.
    std::vector<char> even_vertices() {
        std::vector<int> roots;
        for (int v = 0; v < n_; ++v)
            if (alive_[v] && mate_[v] < 0) roots.push_back(v);
        std::fill(even_.begin(), even_.end(), 0);
        if (roots.empty()) return even_;
        if (search(roots) != -1) throw std::logic_error("matching is not maximum");
        return even_;
    }

private:
    int find_base_lca(int a, int b) {
        std::fill(mark_.begin(), mark_.end(), 0);
        while (true) {
            a = base_[a];
            mark_[a] = 1;
            if (mate_[a] < 0) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (mark_[b]) return b;
            if (mate_[b] < 0) return -1;  // different trees: an augmenting path
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    // Grows an alternating forest from `roots`. Returns the exposed endpoint of
    // an augmenting path, or -1 when none exists.
    int search(const std::vector<int>& roots) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(even_.begin(), even_.end(), 0);
        std::iota(base_.begin(), base_.end(), 0);
        queue_.clear();
        for (int r : roots) {
            even_[r] = 1;
            queue_.push_back(r);
        }
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int v = queue_[head];
            for (int to : g_.neighbors(v)) {
                if (!alive_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
                const bool to_even = mate_[to] < 0 ? even_[to] != 0 : parent_[mate_[to]] != -1 || even_[to];
                if (to_even) {
                    const int cur = find_base_lca(v, to);
                    if (cur < 0) return -2;  // two trees meet: only with several roots
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (alive_[i] && in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!even_[i]) {
                                even_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] < 0) return to;
                    const int next = mate_[to];
                    even_[next] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v >= 0) {
            const int pv = parent_[v];
            const int ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }

    const SimpleGraph& g_;
    const std::vector<char>& alive_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> even_, in_blossom_, mark_;
    std::vector<int> queue_;
};

}  // namespace detail

/// Maximum matching of the live part of g (dead vertices stay exposed). An
/// optional hint matching is kept where valid and then augmented.
inline Matching max_matching(const SimpleGraph& g, const std::vector<char>& alive, const Matching* hint = nullptr) {
    detail::BlossomSolver solver(g, alive);
    if (hint) solver.seed(hint->mate);
    solver.maximize();
    return {solver.mate()};
}

inline Matching max_matching(const SimpleGraph& g, const Matching* hint = nullptr) {
    return max_matching(g, std::vector<char>(g.order(), 1), hint);
}

/// Classical Gallai-Edmonds sets: D (missed by some maximum matching), A
/// (neighbors of D outside D) and C (the rest).
struct GallaiEdmondsSets {
    std::vector<int> D, A, C;
};

inline GallaiEdmondsSets gallai_edmonds_sets(const SimpleGraph& g, const std::vector<char>& alive,
                                             const Matching* hint = nullptr) {
    detail::BlossomSolver solver(g, alive);
    if (hint) solver.seed(hint->mate);
    solver.maximize();
    const auto even = solver.even_vertices();
    GallaiEdmondsSets out;
    std::vector<char> in_a(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        if (alive[v] && even[v])
            for (int w : g.neighbors(v))
                if (alive[w] && !even[w]) in_a[w] = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (!alive[v]) continue;
        if (even[v])
            out.D.push_back(v);
        else if (in_a[v])
            out.A.push_back(v);
        else
            out.C.push_back(v);
    }
    return out;
}

/// A vertex set S such that every component of G - S is factor-critical and S
/// is matched into distinct adjacent components.
struct GEDecomposition {
    std::vector<int> S;
    std::vector<std::vector<int>> components;
    std::vector<char> factor_critical;  // per component
    std::vector<int> component_of_s;    // S[i] is matched to components[component_of_s[i]]

    int deficiency() const { return static_cast<int>(components.size()) - static_cast<int>(S.size()); }
};

/// Perfect matching of the live vertices exists.
inline bool has_perfect_matching_on(const SimpleGraph& g, const std::vector<char>& alive,
                                    const Matching* hint = nullptr) {
    int live = 0;
    for (char a : alive) live += a != 0;
    if (live % 2) return false;
    return max_matching(g, alive, hint).size() * 2 == live;
}

inline bool is_factor_critical(const SimpleGraph& g) {
    const int n = g.order();
    if (n % 2 == 0) return false;
    std::vector<char> alive(n, 1);
    Matching hint = max_matching(g);
    for (int v = 0; v < n; ++v) {
        alive[v] = 0;
        const bool ok = has_perfect_matching_on(g, alive, &hint);
        alive[v] = 1;
        if (!ok) return false;
    }
    return true;
}

namespace detail {

inline bool factor_critical_on(const SimpleGraph& g, const std::vector<int>& comp) {
    return is_factor_critical(g.induced(comp));
}

// Collects S on the live vertices: the Gallai-Edmonds set A, and for every
// component K of the perfectly matchable part C a vertex u of K together with
// the set found recursively in K - u.
inline void collect_barrier(const SimpleGraph& g, std::vector<char> alive, std::vector<int>& S) {
    const auto sets = gallai_edmonds_sets(g, alive);
    S.insert(S.end(), sets.A.begin(), sets.A.end());
    if (sets.C.empty()) return;
    std::vector<char> in_c(g.order(), 0);
    for (int v : sets.C) in_c[v] = 1;
    for (const auto& comp : components(g, in_c)) {
        const int u = comp.front();
        S.push_back(u);
        std::vector<char> rest(g.order(), 0);
        for (int v : comp)
            if (v != u) rest[v] = 1;
        collect_barrier(g, std::move(rest), S);
    }
}

}  // namespace detail

/// Decomposition of the live part of g; see GEDecomposition.
inline GEDecomposition gallai_edmonds(const SimpleGraph& g, const std::vector<char>& alive) {
    GEDecomposition out;
    detail::collect_barrier(g, alive, out.S);
    std::sort(out.S.begin(), out.S.end());
    std::vector<char> rest = alive;
    for (int s : out.S) rest[s] = 0;
    out.components = components(g, rest);
    for (const auto& c : out.components) out.factor_critical.push_back(detail::factor_critical_on(g, c));

    // Bipartite matching S -> components, solved as a general matching.
    const int ns = static_cast<int>(out.S.size());
    const int nc = static_cast<int>(out.components.size());
    std::vector<int> comp_of(g.order(), -1);
    for (int i = 0; i < nc; ++i)
        for (int v : out.components[i]) comp_of[v] = i;
    SimpleGraph bip(ns + nc);
    for (int i = 0; i < ns; ++i)
        for (int w : g.neighbors(out.S[i]))
            if (comp_of[w] >= 0) bip.add_edge(i, ns + comp_of[w]);
    const auto m = max_matching(bip);
    out.component_of_s.assign(ns, -1);
    for (int i = 0; i < ns; ++i)
        if (m.mate[i] >= 0) out.component_of_s[i] = m.mate[i] - ns;
    return out;
}

inline GEDecomposition gallai_edmonds(const SimpleGraph& g) {
    return gallai_edmonds(g, std::vector<char>(g.order(), 1));
}

/// Re-checks every property of a decomposition from scratch.
inline bool verify_decomposition(const SimpleGraph& g, const std::vector<char>& alive, const GEDecomposition& d,
                                 std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> owner(g.order(), -2);
    for (int s : d.S) {
        if (!alive[s] || owner[s] != -2) return fail("S has a dead or repeated vertex");
        owner[s] = -1;
    }
    for (int i = 0; i < static_cast<int>(d.components.size()); ++i)
        for (int v : d.components[i]) {
            if (!alive[v] || owner[v] != -2) return fail("components overlap S or each other");
            owner[v] = i;
        }
    for (int v = 0; v < g.order(); ++v)
        if (alive[v] && owner[v] == -2) return fail("vertex " + std::to_string(v) + " is not covered");
    for (int v = 0; v < g.order(); ++v)
        if (alive[v] && owner[v] >= 0)
            for (int w : g.neighbors(v))
                if (alive[w] && owner[w] >= 0 && owner[w] != owner[v]) return fail("components are adjacent");
    for (int i = 0; i < static_cast<int>(d.components.size()); ++i) {
        const auto sub = g.induced(d.components[i]);
        if (components(sub).size() != 1) return fail("component is disconnected");
        if (!is_factor_critical(sub)) return fail("component is not factor-critical");
        if (!d.factor_critical[i]) return fail("factor-critical flag is wrong");
    }
    if (d.component_of_s.size() != d.S.size()) return fail("S is not fully matched");
    std::vector<char> used(d.components.size(), 0);
    for (std::size_t i = 0; i < d.S.size(); ++i) {
        const int c = d.component_of_s[i];
        if (c < 0 || c >= static_cast<int>(d.components.size()) || used[c]) return fail("S is not matchable");
        used[c] = 1;
        const auto& comp = d.components[c];
        const bool touches = std::any_of(g.neighbors(d.S[i]).begin(), g.neighbors(d.S[i]).end(),
                                         [&](int w) { return std::binary_search(comp.begin(), comp.end(), w); });
        if (!touches) return fail("S vertex matched to a non-adjacent component");
    }
    return true;
}

inline bool verify_decomposition(const SimpleGraph& g, const GEDecomposition& d, std::string* why = nullptr) {
    return verify_decomposition(g, std::vector<char>(g.order(), 1), d, why);
}

struct PerfectMatchingResult {
    bool perfect = false;
    Matching matching;                       // maximum matching
    std::optional<GEDecomposition> barrier;  // set when !perfect: components outnumber S
};

inline PerfectMatchingResult has_perfect_matching(const SimpleGraph& g, const std::vector<char>& alive,
                                                  const Matching* hint = nullptr) {
    PerfectMatchingResult out;
    out.matching = max_matching(g, alive, hint);
    int live = 0;
    for (char a : alive) live += a != 0;
    out.perfect = out.matching.size() * 2 == live;
    if (!out.perfect) out.barrier = gallai_edmonds(g, alive);
    return out;
}

inline PerfectMatchingResult has_perfect_matching(const SimpleGraph& g) {
    return has_perfect_matching(g, std::vector<char>(g.order(), 1));
}

}  // namespace resonantia
