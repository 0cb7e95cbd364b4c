#pragma once

// Resonant hexagon patterns and k-resonance.
//
// A set H of disjoint hexagons is resonant when some perfect matching makes
// every hexagon of H alternating. Since an alternating hexagon is covered by
// three of its own edges, this holds exactly when F - V(H) has a perfect
// matching.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matching.hpp"

namespace resonantia {

struct HexPattern {
    std::vector<int> faces;  // sorted face ids

    auto operator<=>(const HexPattern&) const = default;
};

class InvalidPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ResonanceVerdict {
    bool resonant = false;
    std::optional<Matching> witness;             // perfect matching alternating on the pattern
    std::optional<HexPattern> counterexample;    // smallest failing pattern of a k-resonance query
    std::optional<GEDecomposition> obstruction;  // of F - V(counterexample)
    std::uint64_t patterns_checked = 0;
};

/// Throws InvalidPattern unless the faces are distinct, pairwise
/// vertex-disjoint hexagons of g.
inline void validate_pattern(const FullereneGraph& g, std::span<const int> faces) {
    std::vector<char> used(g.order(), 0);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const int id = faces[i];
        if (id < 0 || id >= g.face_count()) throw InvalidPattern("face id " + std::to_string(id) + " out of range");
        if (!g.face(id).is_hexagon()) throw InvalidPattern("face " + std::to_string(id) + " is not a hexagon");
        for (Vertex v : g.face(id).walk) {
            if (used[v]) throw InvalidPattern("pattern hexagons are not disjoint");
            used[v] = 1;
        }
    }
}

/// Perfect matching of g with every pattern hexagon alternating.
inline bool is_alternating_witness(const FullereneGraph& g, const Matching& m, std::span<const int> faces) {
    if (static_cast<int>(m.mate.size()) != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        const int w = m.mate[v];
        if (w < 0 || m.mate[w] != v || !g.adjacent(v, w)) return false;
    }
    for (int id : faces) {
        const auto& walk = g.face(id).walk;
        int in = 0;
        for (std::size_t i = 0; i < walk.size(); ++i) in += m.mate[walk[i]] == walk[(i + 1) % walk.size()];
        if (in != 3) return false;
    }
    return true;
}

/// Reusable resonance oracle for one graph. Not thread-safe; use one per
/// worker.
class ResonanceChecker {
public:
    explicit ResonanceChecker(const FullereneGraph& g)
        : g_(g), sg_(to_simple_graph(g)), base_(max_matching(sg_)), alive_(g.order(), 1) {}

    const FullereneGraph& graph() const { return g_; }
    const SimpleGraph& simple_graph() const { return sg_; }

    /// Fast decision; faces must already be a valid pattern.
    bool resonant(std::span<const int> faces) {
        set_alive(faces, 0);
        const bool ok = has_perfect_matching_on(sg_, alive_, &base_);
        set_alive(faces, 1);
        return ok;
    }

    /// Validated decision with a verified witness, or the obstruction of
    /// F - V(H) when not resonant.
    ResonanceVerdict check(const HexPattern& h) {
        validate_pattern(g_, h.faces);
        ResonanceVerdict out;
        out.patterns_checked = 1;
        set_alive(h.faces, 0);
        auto pm = has_perfect_matching(sg_, alive_, &base_);
        if (pm.perfect) {
            Matching m = std::move(pm.matching);
            for (int id : h.faces) {
                const auto& w = g_.face(id).walk;
                for (int i = 0; i < 6; i += 2) {
                    m.mate[w[i]] = w[i + 1];
                    m.mate[w[i + 1]] = w[i];
                }
            }
            if (!is_alternating_witness(g_, m, h.faces)) {
                set_alive(h.faces, 1);
                throw std::logic_error("resonance witness failed verification");
            }
            out.resonant = true;
            out.witness = std::move(m);
        } else {
            out.obstruction = std::move(pm.barrier);
        }
        set_alive(h.faces, 1);
        return out;
    }

private:
    void set_alive(std::span<const int> faces, char value) {
        for (int id : faces)
            for (Vertex v : g_.face(id).walk) alive_[v] = value;
    }

    const FullereneGraph& g_;
    SimpleGraph sg_;
    Matching base_;
    std::vector<char> alive_;
};

/// Calls visit(span of face ids) for every set of i pairwise vertex-disjoint
/// hexagons, in lexicographic face-id order. Stops when visit returns false.
/// Returns false if stopped early.
template <typename Visit>
bool for_each_disjoint_hexagon_pattern(const FullereneGraph& g, int i, Visit&& visit) {
    if (i < 0) return true;
    const auto hexes = g.hexagon_ids();
    const int h = static_cast<int>(hexes.size());
    // conflict[a][b]: hexagons a and b share a vertex
    std::vector<std::vector<char>> conflict(h, std::vector<char>(h, 0));
    for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b)
            conflict[a][b] = conflict[b][a] = faces_share_vertex(g, hexes[a], hexes[b]);
    std::vector<int> pick, faces;
    bool go_on = true;
    auto rec = [&](auto&& self, int from) -> void {
        if (!go_on) return;
        if (static_cast<int>(pick.size()) == i) {
            if (!visit(std::span<const int>(faces))) go_on = false;
            return;
        }
        for (int a = from; a < h && go_on; ++a) {
            if (std::any_of(pick.begin(), pick.end(), [&](int b) { return conflict[a][b]; })) continue;
            pick.push_back(a);
            faces.push_back(hexes[a]);
            self(self, a + 1);
            pick.pop_back();
            faces.pop_back();
        }
    };
    rec(rec, 0);
    return go_on;
}

inline std::vector<HexPattern> disjoint_hexagon_patterns(const FullereneGraph& g, int i) {
    std::vector<HexPattern> out;
    for_each_disjoint_hexagon_pattern(g, i, [&](std::span<const int> f) {
        out.push_back({{f.begin(), f.end()}});
        return true;
    });
    return out;
}

inline ResonanceVerdict is_resonant_pattern(const FullereneGraph& g, const HexPattern& h) {
    ResonanceChecker checker(g);
    return checker.check(h);
}

/// Every set of at most k disjoint hexagons is resonant. On failure the
/// counterexample is the first failing pattern of smallest size.
inline ResonanceVerdict is_k_resonant(ResonanceChecker& checker, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const auto& g = checker.graph();
    ResonanceVerdict out;
    for (int i = 0; i <= k; ++i) {
        std::optional<HexPattern> failing;
        for_each_disjoint_hexagon_pattern(g, i, [&](std::span<const int> f) {
            ++out.patterns_checked;
            if (checker.resonant(f)) return true;
            failing = HexPattern{{f.begin(), f.end()}};
            return false;
        });
        if (failing) {
            auto detail = checker.check(*failing);
            out.counterexample = std::move(failing);
            out.obstruction = std::move(detail.obstruction);
            return out;
        }
    }
    out.resonant = true;
    out.witness = checker.check(HexPattern{}).witness;
    return out;
}

inline ResonanceVerdict is_k_resonant(const FullereneGraph& g, int k) {
    ResonanceChecker checker(g);
    return is_k_resonant(checker, k);
}

}  // namespace resonantia
