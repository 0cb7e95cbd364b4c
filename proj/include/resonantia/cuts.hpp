#pragma once

// Edge cuts of fullerenes: recognition and classification, cyclic edge
// connectivity, non-trivial cyclic 5-cuts, and the cut operations O1, O2, O3.

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "spiral.hpp"

namespace resonantia {

/// Edges with exactly one endpoint in X, sorted.
inline std::vector<Edge> nabla(const FullereneGraph& g, std::span<const Vertex> X) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : X) in[v] = 1;
    std::vector<Edge> out;
    for (Vertex v : X)
        for (Vertex w : g.neighbors(v))
            if (!in[w]) out.push_back(make_edge(v, w));
    std::sort(out.begin(), out.end());
    return out;
}

struct EdgeCut {
    std::vector<Edge> edges;                  // sorted
    std::array<std::vector<Vertex>, 2> sides; // side 0 holds the smaller minimum vertex
    std::array<int, 2> pentagons_per_side{};  // pentagons lying entirely in a side

    int size() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Components of g minus the edge set.
inline std::vector<std::vector<Vertex>> components_without(const FullereneGraph& g, const std::vector<Edge>& cut) {
    std::set<Edge> removed(cut.begin(), cut.end());
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0 && !removed.contains(make_edge(v, w))) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline int pentagons_within(const FullereneGraph& g, const std::vector<Vertex>& side) {
    int count = 0;
    for (int id : g.pentagon_ids()) {
        const auto& walk = g.face(id).walk;
        count += std::all_of(walk.begin(), walk.end(),
                             [&](Vertex v) { return std::binary_search(side.begin(), side.end(), v); });
    }
    return count;
}

// Edges of g with both ends in the sorted vertex set.
inline int internal_edges(const FullereneGraph& g, const std::vector<Vertex>& side) {
    int twice = 0;
    for (Vertex v : side)
        for (Vertex w : g.neighbors(v)) twice += std::binary_search(side.begin(), side.end(), w);
    return twice / 2;
}

}  // namespace detail

/// Builds an EdgeCut when removing `edges` leaves exactly two components and
/// every edge joins them.
inline std::optional<EdgeCut> make_edge_cut(const FullereneGraph& g, std::vector<Edge> edges,
                                            std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) -> std::optional<EdgeCut> {
        if (why) *why = msg;
        return std::nullopt;
    };
    for (Edge& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) return fail("not an edge of the graph");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto comps = detail::components_without(g, edges);
    if (comps.size() == 1) return fail("does not disconnect the graph");
    if (comps.size() > 2) return fail("leaves " + std::to_string(comps.size()) + " components");
    EdgeCut out;
    out.edges = std::move(edges);
    out.sides = {std::move(comps[0]), std::move(comps[1])};
    for (const Edge& e : out.edges) {
        const bool u0 = std::binary_search(out.sides[0].begin(), out.sides[0].end(), e.u);
        const bool v0 = std::binary_search(out.sides[0].begin(), out.sides[0].end(), e.v);
        if (u0 == v0) return fail("an edge lies inside one side");
    }
    for (int s = 0; s < 2; ++s) out.pentagons_per_side[s] = detail::pentagons_within(g, out.sides[s]);
    return out;
}

/// The cut ∇(X), provided both X and its complement are connected.
inline std::optional<EdgeCut> cut_from_side(const FullereneGraph& g, std::span<const Vertex> X,
                                            std::string* why = nullptr) {
    return make_edge_cut(g, nabla(g, X), why);
}

struct CutClass {
    bool cyclic = false;
    bool trivial = false;
    bool degenerate = false;
    std::string diagnostic;
};

/// Classifies an edge set: cyclic when every component of F - C contains a
/// cycle, trivial when C = ∇(f) for a face f, degenerate when some component
/// holds fewer than six pentagons.
inline CutClass is_cyclic_cut(const FullereneGraph& g, std::vector<Edge> edges) {
    CutClass out;
    for (Edge& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
            out.diagnostic = "not an edge of the graph";
            return out;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const auto comps = detail::components_without(g, edges);
    if (comps.size() == 1) {
        out.diagnostic = "does not disconnect the graph";
        return out;
    }
    out.cyclic = true;
    for (const auto& c : comps) {
        if (detail::internal_edges(g, c) < static_cast<int>(c.size())) out.cyclic = false;
        if (detail::pentagons_within(g, c) < 6) out.degenerate = true;
    }
    if (!out.cyclic) out.diagnostic = "a component is acyclic";
    for (const Face& f : g.faces())
        if (nabla(g, f.walk) == edges) out.trivial = true;
    return out;
}

namespace detail {

// Unit-capacity max flow between two contracted vertex sets, stopping once
// the flow reaches `limit`.
class FacePairFlow {
public:
    explicit FacePairFlow(const FullereneGraph& g) : g_(g), n_(g.order()) {}

    int min_cut(const std::vector<Vertex>& s_side, const std::vector<Vertex>& t_side, int limit) {
        // node ids: vertices keep their ids, except those in s_side -> n, t_side -> n + 1
        const int S = n_, T = n_ + 1;
        node_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) node_[v] = v;
        for (Vertex v : s_side) node_[v] = S;
        for (Vertex v : t_side) node_[v] = T;
        head_.assign(n_ + 2, -1);
        to_.clear();
        cap_.clear();
        next_.clear();
        for (const Edge& e : g_.edges()) {
            const int a = node_[e.u], b = node_[e.v];
            if (a == b) continue;
            add_arc(a, b);
        }
        int flow = 0;
        std::vector<int> via(n_ + 2);
        std::vector<int> queue;
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -2);
            via[S] = -1;
            queue.assign(1, S);
            for (std::size_t h = 0; h < queue.size() && via[T] == -2; ++h)
                for (int a = head_[queue[h]]; a >= 0; a = next_[a])
                    if (cap_[a] > 0 && via[to_[a]] == -2) {
                        via[to_[a]] = a;
                        queue.push_back(to_[a]);
                    }
            if (via[T] == -2) break;
            for (int v = T; v != S; v = to_[via[v] ^ 1]) {
                --cap_[via[v]];
                ++cap_[via[v] ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    void add_arc(int a, int b) {
        // an undirected unit edge is a pair of arcs of capacity 1 each
        to_.push_back(b);
        cap_.push_back(1);
        next_.push_back(head_[a]);
        head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a);
        cap_.push_back(1);
        next_.push_back(head_[b]);
        head_[b] = static_cast<int>(to_.size()) - 1;
    }

    const FullereneGraph& g_;
    int n_;
    std::vector<int> node_, head_, to_, cap_, next_;
};

}  // namespace detail

/// Minimum over vertex-disjoint face pairs of the edge cut separating them.
inline int cyclic_edge_connectivity(const FullereneGraph& g) {
    detail::FacePairFlow flow(g);
    int best = INT_MAX;
    const int nf = g.face_count();
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            if (faces_share_vertex(g, a, b)) continue;
            best = std::min(best, flow.min_cut(g.face(a).walk, g.face(b).walk, best));
        }
    return best;
}

/// Cyclic edge cuts whose edges form a cycle of length at most max_len in the
/// dual graph, sorted by size then edges. Every minimal cyclic cut is of this
/// form, so this is exact for cuts of size up to max_len.
inline std::vector<EdgeCut> dual_cycle_cuts(const FullereneGraph& g, int max_len) {
    const int nf = g.face_count();
    std::vector<std::vector<std::pair<int, Edge>>> dual(nf);
    for (const Edge& e : g.edges()) {
        const int a = g.face_of_dart(e.u, e.v), b = g.face_of_dart(e.v, e.u);
        dual[a].push_back({b, e});
        dual[b].push_back({a, e});
    }
    std::set<std::vector<Edge>> seen;
    std::vector<EdgeCut> out;
    std::vector<int> path;
    std::vector<Edge> edges;
    std::vector<char> on_path(nf, 0);
    auto consider = [&] {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second) return;
        const auto comps = detail::components_without(g, sorted);
        for (const auto& c : comps)
            if (detail::internal_edges(g, c) < static_cast<int>(c.size())) return;
        if (auto cut = make_edge_cut(g, sorted)) out.push_back(std::move(*cut));
    };
    auto rec = [&](auto&& self, int f) -> void {
        const int start = path.front();
        for (const auto& [h, e] : dual[f]) {
            if (h == start && path.size() >= 3) {
                edges.push_back(e);
                consider();
                edges.pop_back();
            }
            if (h <= start || on_path[h] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[h] = 1;
            path.push_back(h);
            edges.push_back(e);
            self(self, h);
            edges.pop_back();
            path.pop_back();
            on_path[h] = 0;
        }
    };
    for (int s = 0; s < nf; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        rec(rec, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.edges < b.edges;
    });
    return out;
}

/// Cyclic edge connectivity from the shortest cyclic dual cycle (a pentagon
/// always gives one of length 5).
inline int cyclic_edge_connectivity_dual(const FullereneGraph& g) {
    const auto cuts = dual_cycle_cuts(g, 5);
    return cuts.empty() ? -1 : cuts.front().size();
}

/// A cyclic 5-cut that is not ∇ of a pentagon, found by the dual-cycle search.
inline std::optional<EdgeCut> find_nontrivial_cyclic_5_cut(const FullereneGraph& g) {
    for (auto& cut : dual_cycle_cuts(g, 5)) {
        if (cut.size() != 5) continue;
        if (!is_cyclic_cut(g, cut.edges).trivial) return std::move(cut);
    }
    return std::nullopt;
}

/// Whether g is isomorphic to the nanotube G_k with the same vertex count.
inline bool has_nontrivial_cyclic_5_cut(const FullereneGraph& g) {
    const int n = g.order();
    if (n < 30 || (n - 20) % 10 != 0) return false;
    return canonical_form(g) == canonical_form(construct_nanotube((n - 20) / 10));
}

namespace detail {

// Cyclicity test on edge indices, for the exhaustive search.
class IndexedCycleTest {
public:
    explicit IndexedCycleTest(const FullereneGraph& g) : g_(g), all_(g.edges()), removed_(all_.size(), 0) {
        incident_.resize(g.order());
        for (int i = 0; i < static_cast<int>(all_.size()); ++i) {
            incident_[all_[i].u].push_back(i);
            incident_[all_[i].v].push_back(i);
        }
        comp_.resize(g.order());
    }

    const std::vector<Edge>& edges() const { return all_; }

    bool cyclic(const std::vector<int>& cut) {
        for (int i : cut) removed_[i] = 1;
        std::fill(comp_.begin(), comp_.end(), -1);
        int components = 0;
        bool ok = true;
        for (Vertex s = 0; s < g_.order() && ok; ++s) {
            if (comp_[s] >= 0) continue;
            int vertices = 0, degree_sum = 0;
            stack_.assign(1, s);
            comp_[s] = components;
            while (!stack_.empty()) {
                const Vertex v = stack_.back();
                stack_.pop_back();
                ++vertices;
                for (int e : incident_[v]) {
                    if (removed_[e]) continue;
                    ++degree_sum;
                    const Vertex w = all_[e].u == v ? all_[e].v : all_[e].u;
                    if (comp_[w] < 0) {
                        comp_[w] = components;
                        stack_.push_back(w);
                    }
                }
            }
            ok = degree_sum / 2 >= vertices;
            ++components;
        }
        for (int i : cut) removed_[i] = 0;
        return ok && components > 1;
    }

private:
    const FullereneGraph& g_;
    std::vector<Edge> all_;
    std::vector<char> removed_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> comp_, stack_;
};

}  // namespace detail

/// Exhaustive oracle: every edge set of the given size that is a cyclic cut,
/// in lexicographic order. Subsets are split by their first edge across
/// `jobs` threads.
inline std::vector<std::vector<Edge>> enumerate_cyclic_cuts(const FullereneGraph& g, int size, int jobs = 1) {
    const int m = g.edge_count();
    std::vector<std::vector<std::vector<Edge>>> by_first(m);
    std::atomic<int> next{0};
    auto worker = [&] {
        detail::IndexedCycleTest test(g);
        const auto& all = test.edges();
        std::vector<int> idx;
        for (int first; (first = next++) < m;) {
            auto& bucket = by_first[first];
            idx.assign(1, first);
            auto rec = [&](auto&& self, int from) -> void {
                if (static_cast<int>(idx.size()) == size) {
                    if (!test.cyclic(idx)) return;
                    std::vector<Edge> cut;
                    for (int i : idx) cut.push_back(all[i]);
                    bucket.push_back(std::move(cut));
                    return;
                }
                for (int i = from; i <= m - (size - static_cast<int>(idx.size())); ++i) {
                    idx.push_back(i);
                    self(self, i + 1);
                    idx.pop_back();
                }
            };
            rec(rec, first + 1);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<std::vector<Edge>> out;
    for (auto& b : by_first)
        for (auto& c : b) out.push_back(std::move(c));
    return out;
}

enum class CutOperation { kO1, kO2, kO3 };

inline const char* to_string(CutOperation op) {
    switch (op) {
        case CutOperation::kO1: return "O1";
        case CutOperation::kO2: return "O2";
        case CutOperation::kO3: return "O3";
    }
    return "?";
}

class CutOperationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies O1, O2 or O3 to side `side` (0 or 1) of the cut, moving vertices
/// of that side across:
///   O1 - a vertex of degree 1 in the side (cut shrinks by one);
///   O2 - two adjacent vertices of degree 2 (size kept);
///   O3 - the whole outer boundary cycle of the side when its vertices
///        alternate between degree 2 and 3 (size kept).
/// Degrees are taken in the subgraph induced by the side. The smallest
/// qualifying vertices are used. The resulting cut is re-validated.
inline EdgeCut apply_cut_operation(const FullereneGraph& g, const EdgeCut& cut, CutOperation op, int side) {
    if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
    const auto& H = cut.sides[side];
    std::vector<char> in(g.order(), 0);
    for (Vertex v : H) in[v] = 1;
    auto deg = [&](Vertex v) {
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += in[w];
        return d;
    };
    std::vector<Vertex> moved;
    int expected = cut.size();
    switch (op) {
        case CutOperation::kO1:
            for (Vertex v : H)
                if (deg(v) == 1) {
                    moved = {v};
                    break;
                }
            if (moved.empty()) throw CutOperationError("O1 needs a vertex of degree one");
            expected = cut.size() - 1;
            break;
        case CutOperation::kO2:
            for (Vertex v : H) {
                if (deg(v) != 2) continue;
                for (Vertex w : g.neighbors(v))
                    if (in[w] && w > v && deg(w) == 2 && moved.empty()) moved = {v, w};
                if (!moved.empty()) break;
            }
            if (moved.empty()) throw CutOperationError("O2 needs two adjacent vertices of degree two");
            break;
        case CutOperation::kO3: {
            // outer boundary: side vertices on faces that also meet the other side
            std::vector<char> on(g.order(), 0);
            for (const Face& f : g.faces()) {
                const bool mixed = std::any_of(f.walk.begin(), f.walk.end(), [&](Vertex v) { return !in[v]; }) &&
                                   std::any_of(f.walk.begin(), f.walk.end(), [&](Vertex v) { return in[v]; });
                if (mixed)
                    for (Vertex v : f.walk)
                        if (in[v]) on[v] = 1;
            }
            for (Vertex v : H)
                if (on[v]) moved.push_back(v);
            bool ok = !moved.empty() && moved.size() < H.size() && moved.size() % 2 == 0;
            for (Vertex v : moved) {
                int along = 0;
                for (Vertex w : g.neighbors(v)) along += on[w] && in[w];
                if (along != 2) ok = false;
            }
            // walk the cycle checking alternation and connectivity
            if (ok) {
                Vertex prev = -1, cur = moved.front();
                std::size_t steps = 0;
                do {
                    Vertex nxt = -1;
                    for (Vertex w : g.neighbors(cur))
                        if (on[w] && in[w] && w != prev) {
                            nxt = w;
                            break;
                        }
                    if (nxt < 0 || (deg(cur) == 2) == (deg(nxt) == 2) || (deg(cur) != 2 && deg(cur) != 3)) {
                        ok = false;
                        break;
                    }
                    prev = cur;
                    cur = nxt;
                    ++steps;
                } while (cur != moved.front() && steps <= moved.size());
                if (steps != moved.size()) ok = false;
            }
            if (!ok) throw CutOperationError("O3 needs an outer boundary cycle alternating degree 2 and 3");
            break;
        }
    }
    std::vector<Vertex> rest;
    std::vector<char> gone(g.order(), 0);
    for (Vertex v : moved) gone[v] = 1;
    for (Vertex v : H)
        if (!gone[v]) rest.push_back(v);
    std::string why;
    auto result = cut_from_side(g, rest, &why);
    if (!result) throw CutOperationError(std::string(to_string(op)) + " produced an invalid cut: " + why);
    if (result->size() != expected)
        throw CutOperationError(std::string(to_string(op)) + " produced a cut of unexpected size");
    return *result;
}

}  // namespace resonantia
