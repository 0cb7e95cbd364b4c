#pragma once

// Fullerene graphs as combinatorial spherical embeddings.
//
// A graph is given by its rotation system: for every vertex the cyclic order of
// its three neighbors. Faces are traced from the rotation (leave v towards the
// successor of the vertex we arrived from), so either handedness is accepted.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resonantia {

using Vertex = int;
using Rotation = std::vector<std::array<Vertex, 3>>;

enum class Violation {
    kNotCubic,
    kNotSimple,
    kAsymmetric,
    kDisconnected,
    kEuler,
    kPentagonCount,
    kFaceSize,
    kDegenerateFace,
};

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::kNotCubic: return "not cubic";
        case Violation::kNotSimple: return "not simple";
        case Violation::kAsymmetric: return "asymmetric adjacency";
        case Violation::kDisconnected: return "disconnected";
        case Violation::kEuler: return "Euler check";
        case Violation::kPentagonCount: return "pentagon count";
        case Violation::kFaceSize: return "face size";
        case Violation::kDegenerateFace: return "degenerate face";
    }
    return "unknown";
}

class InvalidFullerene : public std::runtime_error {
public:
    InvalidFullerene(Violation v, const std::string& detail)
        : std::runtime_error(std::string(to_string(v)) + ": " + detail), violation_(v) {}

    Violation violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Face {
    int id = 0;
    std::vector<Vertex> walk;

    int size() const { return static_cast<int>(walk.size()); }
    bool is_pentagon() const { return walk.size() == 5; }
    bool is_hexagon() const { return walk.size() == 6; }
    bool contains(Vertex v) const { return std::find(walk.begin(), walk.end(), v) != walk.end(); }
};

namespace detail {

// Index of `u` in the rotation of `v`, or -1.
inline int slot_of(const Rotation& rot, Vertex v, Vertex u) {
    for (int i = 0; i < 3; ++i)
        if (rot[v][i] == u) return i;
    return -1;
}

// Traces every facial walk of a rotation system with symmetric adjacency.
// dart_face[3*v+i] receives the index of the walk containing v -> rot[v][i].
inline std::vector<std::vector<Vertex>> trace_walks(const Rotation& rot, std::vector<int>& dart_face) {
    const int n = static_cast<int>(rot.size());
    dart_face.assign(3 * static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> walks;
    for (int start = 0; start < 3 * n; ++start) {
        if (dart_face[start] != -1) continue;
        const int id = static_cast<int>(walks.size());
        std::vector<Vertex> walk;
        int dart = start;
        while (dart_face[dart] == -1) {
            dart_face[dart] = id;
            const Vertex v = dart / 3;
            const Vertex w = rot[v][dart % 3];
            walk.push_back(v);
            dart = 3 * w + (slot_of(rot, w, v) + 1) % 3;
        }
        walks.push_back(std::move(walk));
    }
    return walks;
}

}  // namespace detail

/// Immutable validated fullerene graph.
class FullereneGraph {
public:
    /// Validates a rotation system and builds the graph, or throws InvalidFullerene.
    static FullereneGraph build(Rotation rotation);

    /// Same as build(), but accepts neighbor lists of arbitrary length so that
    /// non-cubic input is reported as a violation rather than a type error.
    static FullereneGraph build(std::span<const std::vector<Vertex>> neighbor_lists);

    int order() const { return n_; }
    int edge_count() const { return 3 * n_ / 2; }
    const Rotation& rotation() const { return rot_; }
    const std::array<Vertex, 3>& neighbors(Vertex v) const { return rot_[v]; }
    bool adjacent(Vertex a, Vertex b) const { return detail::slot_of(rot_, a, b) >= 0; }

    /// Sorted list of undirected edges.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : rot_[v])
                if (v < w) out.push_back({v, w});
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    /// Face whose walk traverses the directed edge u -> v.
    int face_of_dart(Vertex u, Vertex v) const { return dart_face_[3 * u + detail::slot_of(rot_, u, v)]; }

    /// The three faces around v.
    std::array<int, 3> faces_at(Vertex v) const {
        return {dart_face_[3 * v], dart_face_[3 * v + 1], dart_face_[3 * v + 2]};
    }

    std::vector<int> pentagon_ids() const { return ids_of_size(5); }
    std::vector<int> hexagon_ids() const { return ids_of_size(6); }

private:
    FullereneGraph() = default;

    std::vector<int> ids_of_size(int s) const {
        std::vector<int> out;
        for (const Face& f : faces_)
            if (f.size() == s) out.push_back(f.id);
        return out;
    }

    int n_ = 0;
    Rotation rot_;
    std::vector<Face> faces_;
    std::vector<int> dart_face_;
};

inline FullereneGraph FullereneGraph::build(std::span<const std::vector<Vertex>> neighbor_lists) {
    Rotation rot(neighbor_lists.size());
    for (std::size_t v = 0; v < neighbor_lists.size(); ++v) {
        if (neighbor_lists[v].size() != 3)
            throw InvalidFullerene(Violation::kNotCubic, "vertex " + std::to_string(v) + " has " +
                                                             std::to_string(neighbor_lists[v].size()) +
                                                             " neighbors");
        std::copy(neighbor_lists[v].begin(), neighbor_lists[v].end(), rot[v].begin());
    }
    return build(std::move(rot));
}

inline FullereneGraph FullereneGraph::build(Rotation rot) {
    const int n = static_cast<int>(rot.size());
    for (int v = 0; v < n; ++v) {
        const auto& r = rot[v];
        for (Vertex w : r)
            if (w < 0 || w >= n || w == v)
                throw InvalidFullerene(Violation::kNotSimple, "bad neighbor of vertex " + std::to_string(v));
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
            throw InvalidFullerene(Violation::kNotSimple, "repeated neighbor at vertex " + std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
        for (Vertex w : rot[v])
            if (detail::slot_of(rot, w, v) < 0)
                throw InvalidFullerene(Violation::kAsymmetric,
                                       std::to_string(v) + "->" + std::to_string(w) + " has no reverse");

    if (n == 0) throw InvalidFullerene(Violation::kDisconnected, "empty graph");
    {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : rot[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n)
            throw InvalidFullerene(Violation::kDisconnected,
                                   std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable");
    }

    std::vector<int> dart_face;
    auto walks = detail::trace_walks(rot, dart_face);
    const int faces = static_cast<int>(walks.size());
    const int edges = 3 * n / 2;
    if (n - edges + faces != 2)
        throw InvalidFullerene(Violation::kEuler, "V - E + F = " + std::to_string(n - edges + faces));

    const auto pentagons = std::count_if(walks.begin(), walks.end(), [](const auto& w) { return w.size() == 5; });
    if (pentagons != 12)
        throw InvalidFullerene(Violation::kPentagonCount, std::to_string(pentagons) + " pentagons");
    for (const auto& w : walks) {
        if (w.size() != 5 && w.size() != 6)
            throw InvalidFullerene(Violation::kFaceSize, "face of size " + std::to_string(w.size()));
        auto sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidFullerene(Violation::kDegenerateFace, "facial walk repeats a vertex");
    }

    // Canonical face numbering: by the lexicographically smallest dart on the
    // walk, with the walk rotated to start at that dart.
    struct Keyed {
        Vertex u, v;
        std::vector<Vertex> walk;
        int old_id;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(faces);
    for (int id = 0; id < faces; ++id) {
        auto& w = walks[id];
        const int s = static_cast<int>(w.size());
        int best = 0;
        for (int i = 1; i < s; ++i) {
            const auto cand = std::pair{w[i], w[(i + 1) % s]};
            const auto cur = std::pair{w[best], w[(best + 1) % s]};
            if (cand < cur) best = i;
        }
        std::rotate(w.begin(), w.begin() + best, w.end());
        keyed.push_back({w[0], w[1], std::move(w), id});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    std::vector<int> remap(faces);
    FullereneGraph g;
    g.n_ = n;
    g.faces_.reserve(faces);
    for (int i = 0; i < faces; ++i) {
        remap[keyed[i].old_id] = i;
        g.faces_.push_back({i, std::move(keyed[i].walk)});
    }
    for (int& f : dart_face) f = remap[f];
    g.rot_ = std::move(rot);
    g.dart_face_ = std::move(dart_face);
    return g;
}

/// Builds and validates; `n` must match the number of neighbor lists.
inline FullereneGraph build_and_validate(int n, std::span<const std::vector<Vertex>> rotation) {
    if (static_cast<int>(rotation.size()) != n)
        throw InvalidFullerene(Violation::kNotCubic, "expected " + std::to_string(n) + " neighbor lists, got " +
                                                         std::to_string(rotation.size()));
    return FullereneGraph::build(rotation);
}

inline const std::vector<Face>& extract_faces(const FullereneGraph& g) { return g.faces(); }

/// Faces across each boundary edge of `f`, in walk order: entry i lies across
/// the edge walk[i] -- walk[i+1].
inline std::vector<int> face_neighbors(const FullereneGraph& g, const Face& f) {
    std::vector<int> out;
    out.reserve(f.walk.size());
    const int s = f.size();
    for (int i = 0; i < s; ++i) out.push_back(g.face_of_dart(f.walk[(i + 1) % s], f.walk[i]));
    return out;
}

/// Shared edges of two faces.
inline std::vector<Edge> shared_edges(const FullereneGraph& g, int a, int b) {
    std::vector<Edge> out;
    const auto& w = g.face(a).walk;
    const int s = static_cast<int>(w.size());
    for (int i = 0; i < s; ++i)
        if (g.face_of_dart(w[(i + 1) % s], w[i]) == b) out.push_back(make_edge(w[i], w[(i + 1) % s]));
    return out;
}

inline bool faces_share_vertex(const FullereneGraph& g, int a, int b) {
    for (Vertex v : g.face(a).walk)
        if (g.face(b).contains(v)) return true;
    return false;
}

/// Brute-force vertex 3-connectivity: no pair of vertices disconnects the graph.
inline bool is_three_connected(const FullereneGraph& g) {
    const int n = g.order();
    std::vector<char> seen(n);
    std::vector<Vertex> stack;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            std::fill(seen.begin(), seen.end(), 0);
            seen[a] = seen[b] = 1;
            Vertex start = 0;
            while (seen[start]) ++start;
            seen[start] = 1;
            stack.assign(1, start);
            int reached = 3;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            if (reached != n) return false;
        }
    return true;
}

/// Copy of `g` with vertices renumbered by `perm` (old -> new); the rotation of
/// each vertex is optionally reversed, which yields the mirror embedding.
inline FullereneGraph relabel(const FullereneGraph& g, std::span<const Vertex> perm, bool mirror = false) {
    Rotation rot(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& r = g.neighbors(v);
        auto& out = rot[perm[v]];
        out = {perm[r[0]], perm[r[1]], perm[r[2]]};
        if (mirror) std::swap(out[1], out[2]);
    }
    return FullereneGraph::build(std::move(rot));
}

}  // namespace resonantia
