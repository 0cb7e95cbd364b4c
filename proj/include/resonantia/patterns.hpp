#pragma once

// Pentagon substructures: R (three pentagons around a vertex), L (four
// pentagons that are consecutive neighbors of one face) and the isolated
// pentagon rule.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace resonantia {

struct PentagonAdjacency {
    std::vector<int> nodes;                   // the 12 pentagon face ids, ascending
    std::vector<std::pair<int, int>> links;   // face-id pairs sharing an edge, first < second

    bool linked(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(links.begin(), links.end(), std::pair{a, b});
    }
};

inline PentagonAdjacency pentagon_adjacency(const FullereneGraph& g) {
    PentagonAdjacency out;
    out.nodes = g.pentagon_ids();
    for (int p : out.nodes)
        for (int q : face_neighbors(g, g.face(p)))
            if (p < q && g.face(q).is_pentagon()) out.links.emplace_back(p, q);
    std::sort(out.links.begin(), out.links.end());
    return out;
}

enum class PatternKind { kL, kR };

inline const char* to_string(PatternKind k) { return k == PatternKind::kL ? "L" : "R"; }

struct PatternWitness {
    PatternKind kind;
    std::vector<int> faces;  // 4 pentagons for L (in cyclic order), 3 for R
    int anchor;              // L: the common face; R: the common vertex
};

/// A vertex lying on three pentagons.
inline std::optional<PatternWitness> find_R(const FullereneGraph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto f = g.faces_at(v);
        if (g.face(f[0]).is_pentagon() && g.face(f[1]).is_pentagon() && g.face(f[2]).is_pentagon()) {
            std::vector<int> faces(f.begin(), f.end());
            std::sort(faces.begin(), faces.end());
            return PatternWitness{PatternKind::kR, std::move(faces), v};
        }
    }
    return std::nullopt;
}

/// A face with four consecutive pentagonal neighbors.
inline std::optional<PatternWitness> find_L(const FullereneGraph& g) {
    for (const Face& f : g.faces()) {
        const auto nb = face_neighbors(g, f);
        const int s = static_cast<int>(nb.size());
        for (int start = 0; start < s; ++start) {
            bool all = true;
            for (int j = 0; j < 4 && all; ++j) all = g.face(nb[(start + j) % s]).is_pentagon();
            if (all) {
                std::vector<int> faces;
                for (int j = 0; j < 4; ++j) faces.push_back(nb[(start + j) % s]);
                return PatternWitness{PatternKind::kL, std::move(faces), f.id};
            }
        }
    }
    return std::nullopt;
}

inline bool contains_R(const FullereneGraph& g) { return find_R(g).has_value(); }
inline bool contains_L(const FullereneGraph& g) { return find_L(g).has_value(); }

/// Re-checks a witness against the detection predicates.
inline bool verify_witness(const FullereneGraph& g, const PatternWitness& w) {
    auto pentagon = [&](int id) { return id >= 0 && id < g.face_count() && g.face(id).is_pentagon(); };
    if (!std::all_of(w.faces.begin(), w.faces.end(), pentagon)) return false;
    if (w.kind == PatternKind::kR) {
        if (w.faces.size() != 3 || w.anchor < 0 || w.anchor >= g.order()) return false;
        return std::all_of(w.faces.begin(), w.faces.end(), [&](int id) { return g.face(id).contains(w.anchor); });
    }
    if (w.faces.size() != 4 || w.anchor < 0 || w.anchor >= g.face_count()) return false;
    const auto nb = face_neighbors(g, g.face(w.anchor));
    const int s = static_cast<int>(nb.size());
    for (int start = 0; start < s; ++start) {
        bool match = true;
        for (int j = 0; j < 4 && match; ++j) match = nb[(start + j) % s] == w.faces[j];
        if (match) return true;
    }
    return false;
}

/// No two pentagons share a vertex.
inline bool is_IPR(const FullereneGraph& g) {
    const auto p = g.pentagon_ids();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (faces_share_vertex(g, p[i], p[j])) return false;
    return true;
}

/// Three pairwise edge-adjacent pentagons, found from the pentagon adjacency
/// alone (independent of vertex incidences).
inline bool has_pentagon_triangle(const FullereneGraph& g) {
    const auto adj = pentagon_adjacency(g);
    const auto& p = adj.nodes;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            if (!adj.linked(p[a], p[b])) continue;
            for (std::size_t c = b + 1; c < p.size(); ++c)
                if (adj.linked(p[a], p[c]) && adj.linked(p[b], p[c])) return true;
        }
    return false;
}

}  // namespace resonantia
