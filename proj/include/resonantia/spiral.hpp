#pragma once

// Face-spiral construction of fullerenes.
//
// A spiral lists face sizes in the order the faces are wound onto a growing
// patch: every face after the first touches its predecessor and the oldest face
// of the patch boundary that still has free sides. Winding happens in the dual
// triangulation; each face keeps the neighbors it has acquired as a contiguous
// arc, extended on the left or on the right, so that a saturated face carries
// its full cyclic neighbor order.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace resonantia {

struct SpiralCode {
    std::vector<int> sizes;

    int vertex_count() const { return 2 * (static_cast<int>(sizes.size()) - 2); }

    /// Exactly twelve 5s, everything else 6.
    bool well_formed() const {
        return std::count(sizes.begin(), sizes.end(), 5) == 12 &&
               std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 5 || s == 6; });
    }
};

namespace detail {

class DualWinder {
public:
    static constexpr int kMaxSize = 8;

    explicit DualWinder(int capacity) : faces_(capacity), boundary_(capacity + 1) {}

    int placed() const { return placed_; }
    int capacity() const { return static_cast<int>(faces_.size()); }
    int boundary_size() const { return end_ - head_; }
    int back() const { return boundary_[end_ - 1]; }
    int front() const { return boundary_[head_]; }
    int size_of(int f) const { return faces_[f].size; }
    int degree(int f) const { return faces_[f].right - faces_[f].left; }
    bool saturated(int f) const { return degree(f) == faces_[f].size; }

    std::vector<int> arc(int f) const {
        const Slot& s = faces_[f];
        return {s.nb.begin() + s.left, s.nb.begin() + s.right};
    }

    bool adjacent(int a, int b) const {
        const Slot& s = faces_[a];
        for (int i = s.left; i < s.right; ++i)
            if (s.nb[i] == b) return true;
        return false;
    }

    /// Winds one more face of the given size. Returns false when the spiral
    /// cannot continue (a face would exceed its size, or a double adjacency).
    bool add(int size) {
        if (placed_ == capacity() || size < 3 || size > kMaxSize) return false;
        const int k = placed_++;
        faces_[k] = Slot{};
        faces_[k].size = static_cast<std::uint8_t>(size);
        if (k == 0) {
            head_ = 0;
            end_ = 0;
            boundary_[end_++] = 0;
            return true;
        }
        const int b = back();
        const int f = front();
        if (!push_right(b, k) || !push_left(k, b)) return false;
        if (f != b && (!push_right(k, f) || !push_left(f, k))) return false;
        boundary_[end_++] = static_cast<std::uint8_t>(k);

        for (bool progress = true; progress;) {
            progress = false;
            if (end_ - head_ >= 3 && saturated(front())) {
                ++head_;
                if (end_ - head_ >= 3) {
                    const int nf = front();
                    if (adjacent(k, nf) || !push_right(k, nf) || !push_left(nf, k)) return false;
                }
                progress = true;
            }
            if (end_ - head_ >= 3 && saturated(boundary_[end_ - 2])) {
                boundary_[end_ - 2] = boundary_[end_ - 1];
                --end_;
                if (end_ - head_ >= 3) {
                    const int nb = boundary_[end_ - 2];
                    if (adjacent(k, nb) || !push_left(k, nb) || !push_right(nb, k)) return false;
                }
                progress = true;
            }
        }
        // The newest face must stay open for its successor.
        return placed_ == capacity() || !saturated(k);
    }

    bool complete() const {
        if (placed_ != capacity()) return false;
        for (int f = 0; f < placed_; ++f)
            if (!saturated(f)) return false;
        return true;
    }

    /// Primal rotation system of a completed winding; nullopt if the arcs do
    /// not close up into a triangulation.
    std::optional<Rotation> primal() const {
        if (!complete()) return std::nullopt;
        const int nf = placed_;
        using Tri = std::array<int, 3>;
        auto key_of = [](int a, int b, int c) -> Tri {
            if (a < b && a < c) return {a, b, c};
            if (b < a && b < c) return {b, c, a};
            return {c, a, b};
        };
        std::map<Tri, int> id;
        std::vector<int> seen;
        std::vector<std::vector<int>> corner(nf);
        for (int f = 0; f < nf; ++f) {
            const auto d = arc(f);
            const int s = static_cast<int>(d.size());
            for (int i = 0; i < s; ++i) {
                const int b = d[i], c = d[(i + 1) % s];
                if (b == c || !adjacent(b, c)) return std::nullopt;
                auto [it, fresh] = id.try_emplace(key_of(f, b, c), static_cast<int>(id.size()));
                if (fresh) seen.push_back(0);
                ++seen[it->second];
                corner[f].push_back(it->second);
            }
        }
        for (int c : seen)
            if (c != 3) return std::nullopt;
        const int n = static_cast<int>(id.size());
        // across[t][j]: neighbor of primal vertex t across the j-th side of its triangle.
        std::vector<std::array<int, 3>> across(n, {-1, -1, -1});
        std::vector<Tri> tri(n);
        for (const auto& [k, t] : id) tri[t] = k;
        for (int f = 0; f < nf; ++f) {
            const int s = static_cast<int>(corner[f].size());
            for (int i = 0; i < s; ++i) {
                const int t = corner[f][i];
                const int j = static_cast<int>(std::find(tri[t].begin(), tri[t].end(), f) - tri[t].begin());
                across[t][j] = corner[f][(i + s - 1) % s];
            }
        }
        Rotation rot(n);
        for (int t = 0; t < n; ++t) rot[t] = {across[t][0], across[t][1], across[t][2]};
        return rot;
    }

private:
    struct Slot {
        std::array<std::uint8_t, 2 * kMaxSize + 1> nb{};
        std::int8_t left = kMaxSize;
        std::int8_t right = kMaxSize;
        std::uint8_t size = 0;
    };

    bool push_left(int f, int x) {
        Slot& s = faces_[f];
        if (s.right - s.left >= s.size) return false;
        s.nb[--s.left] = static_cast<std::uint8_t>(x);
        return true;
    }
    bool push_right(int f, int x) {
        Slot& s = faces_[f];
        if (s.right - s.left >= s.size) return false;
        s.nb[s.right++] = static_cast<std::uint8_t>(x);
        return true;
    }

    std::vector<Slot> faces_;
    std::vector<std::uint8_t> boundary_;
    int head_ = 0;
    int end_ = 0;
    int placed_ = 0;
};

}  // namespace detail

struct UnwindResult {
    std::optional<FullereneGraph> graph;
    std::string diagnostic;

    explicit operator bool() const { return graph.has_value(); }
};

/// Winds an arbitrary face-size sequence into a cubic rotation system, without
/// fullerene validation. Useful for building non-fullerene test inputs.
inline std::optional<Rotation> wind_faces(const std::vector<int>& sizes, std::string* why = nullptr) {
    detail::DualWinder w(static_cast<int>(sizes.size()));
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (!w.add(sizes[i])) {
            if (why) *why = "face overflow at position " + std::to_string(i);
            return std::nullopt;
        }
    auto rot = w.primal();
    if (!rot && why) *why = "spiral does not close";
    return rot;
}

inline UnwindResult unwind_spiral(const SpiralCode& code) {
    if (!code.well_formed()) return {std::nullopt, "spiral code must contain exactly twelve 5s and otherwise 6s"};
    std::string why;
    auto rot = wind_faces(code.sizes, &why);
    if (!rot) return {std::nullopt, why};
    try {
        return {FullereneGraph::build(std::move(*rot)), {}};
    } catch (const InvalidFullerene& e) {
        return {std::nullopt, e.what()};
    }
}

/// Face-size spiral of `g` started at faces (first, second) and the third face
/// chosen on the side given by `orientation` (0 or 1). Returns nullopt when
/// the walk does not form a spiral from that start.
inline std::optional<SpiralCode> spiral_from(const FullereneGraph& g, int first, int second, int orientation) {
    const int nf = g.face_count();
    std::vector<std::vector<int>> nbrs(nf);
    for (const Face& f : g.faces()) nbrs[f.id] = face_neighbors(g, f);
    auto common_open = [&](int a, int b, const std::vector<char>& placed, int pick) -> int {
        const auto& na = nbrs[a];
        const int s = static_cast<int>(na.size());
        const int at = static_cast<int>(std::find(na.begin(), na.end(), b) - na.begin());
        if (at == s) return -1;
        const int cand[2] = {na[(at + 1) % s], na[(at + s - 1) % s]};
        if (pick >= 0) return placed[cand[pick]] ? -1 : cand[pick];
        const bool open0 = !placed[cand[0]], open1 = !placed[cand[1]];
        if (open0 == open1) return -1;
        return open0 ? cand[0] : cand[1];
    };

    detail::DualWinder w(nf);
    std::vector<char> placed(nf, 0);
    std::vector<int> order;
    order.reserve(nf);
    auto place = [&](int f) {
        placed[f] = 1;
        order.push_back(f);
        return w.add(g.face(f).size());
    };
    if (std::find(nbrs[first].begin(), nbrs[first].end(), second) == nbrs[first].end()) return std::nullopt;
    if (!place(first) || !place(second)) return std::nullopt;
    const int third = common_open(second, first, placed, orientation);
    if (third < 0 || !place(third)) return std::nullopt;
    while (static_cast<int>(order.size()) < nf) {
        const int next = common_open(order[w.back()], order[w.front()], placed, -1);
        if (next < 0 || !place(next)) return std::nullopt;
    }
    if (!w.complete()) return std::nullopt;
    SpiralCode code;
    for (int f : order) code.sizes.push_back(g.face(f).size());
    return code;
}

/// Every spiral of `g` over all starting dual darts and both orientations.
inline std::vector<SpiralCode> all_spirals(const FullereneGraph& g) {
    std::vector<SpiralCode> out;
    for (const Face& f : g.faces())
        for (int nb : face_neighbors(g, f))
            for (int o = 0; o < 2; ++o)
                if (auto s = spiral_from(g, f.id, nb, o)) out.push_back(std::move(*s));
    return out;
}

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t closed_spirals = 0;
};

namespace detail {

// Depth-first walk over spiral codes that start with `prefix`. `visit` is
// called with each completed winding; stop early by returning false.
template <typename Visit>
void for_each_closed_spiral(int n, const std::vector<int>& prefix, Visit&& visit, EnumerationStats* stats = nullptr) {
    const int nf = n / 2 + 2;
    std::vector<DualWinder> level(nf + 1, DualWinder(nf));
    std::vector<int> sizes(nf);
    EnumerationStats local;
    auto& st = stats ? *stats : local;

    struct Frame {
        int pentagons;
        int choice;
    };
    std::vector<Frame> frames(nf + 1);
    int depth = 0;
    frames[0] = {0, 0};
    while (depth >= 0) {
        Frame& fr = frames[depth];
        if (depth == nf) {
            ++st.closed_spirals;
            if (level[depth].complete() && !visit(level[depth], sizes)) return;
            --depth;
            continue;
        }
        if (fr.choice == 2) {
            --depth;
            continue;
        }
        const int size = fr.choice++ == 0 ? 5 : 6;
        if (depth < static_cast<int>(prefix.size()) && size != prefix[depth]) continue;
        const int pentagons = fr.pentagons + (size == 5);
        const int remaining = nf - depth - 1;
        if (pentagons > 12 || 12 - pentagons > remaining) continue;
        ++st.nodes;
        level[depth + 1] = level[depth];
        if (!level[depth + 1].add(size)) continue;
        // The unplaced faces close the boundary: counting dual edges of the
        // remaining disk gives boundary <= 2 * remaining + 4 - pentagons left.
        if (remaining > 0 && level[depth + 1].boundary_size() > 2 * remaining + 4 - (12 - pentagons)) continue;
        sizes[depth] = size;
        ++depth;
        frames[depth] = {pentagons, 0};
    }
}

// Spiral prefixes splitting the search into independent shards.
inline std::vector<std::vector<int>> spiral_shards(int n, int depth) {
    depth = std::min(depth, n / 2 + 2);
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << depth); ++mask) {
        std::vector<int> p(depth);
        for (int i = 0; i < depth; ++i) p[i] = (mask >> (depth - 1 - i)) & 1 ? 6 : 5;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

/// The graph rebuilt from its lexicographically smallest spiral, so that the
/// vertex numbering depends only on the isomorphism class.
inline FullereneGraph spiral_representative(const FullereneGraph& g) {
    auto spirals = all_spirals(g);
    if (spirals.empty()) return g;
    const auto& best = *std::min_element(spirals.begin(), spirals.end(),
                                         [](const SpiralCode& a, const SpiralCode& b) { return a.sizes < b.sizes; });
    auto r = unwind_spiral(best);
    return r ? std::move(*r.graph) : g;
}

/// All fullerene isomers on n vertices, pairwise non-isomorphic, ordered by
/// canonical code. Empty for odd n, n < 20 and n = 22. The search is split
/// into shards processed by `jobs` threads; the result does not depend on it.
inline std::vector<FullereneGraph> enumerate_isomers(int n, EnumerationStats* stats = nullptr, int jobs = 1) {
    std::vector<FullereneGraph> out;
    if (n < 20 || n % 2 != 0 || n > 254) return out;
    // Every isomer is reached from many spirals. Once an isomer is found, all
    // of its spirals are recorded so later leaves are recognized by a lookup.
    std::mutex lock;
    std::set<std::vector<int>> known;
    std::map<CanonicalCode, FullereneGraph> found;
    const auto shards = detail::spiral_shards(n, 4);
    std::atomic<std::size_t> next{0};
    std::vector<EnumerationStats> shard_stats(shards.size());

    auto worker = [&] {
        for (std::size_t i; (i = next++) < shards.size();) {
            detail::for_each_closed_spiral(
                n, shards[i],
                [&](const detail::DualWinder& w, const std::vector<int>& sizes) {
                    {
                        std::lock_guard guard(lock);
                        if (!known.insert(sizes).second) return true;
                    }
                    auto rot = w.primal();
                    if (!rot) return true;
                    try {
                        auto g = FullereneGraph::build(std::move(*rot));
                        auto spirals = all_spirals(g);
                        auto code = canonical_form(g);
                        std::lock_guard guard(lock);
                        for (auto& s : spirals) known.insert(std::move(s.sizes));
                        found.try_emplace(std::move(code), std::move(g));
                    } catch (const InvalidFullerene&) {
                    }
                    return true;
                },
                &shard_stats[i]);
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
    if (stats)
        for (const auto& s : shard_stats) {
            stats->nodes += s.nodes;
            stats->closed_spirals += s.closed_spirals;
        }
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(spiral_representative(g));
    return out;
}

/// The nanotube G_k: two six-pentagon caps joined by k rings of five hexagons.
///
/// Vertices are laid out from the top cap downwards: a 5-cycle, then k+1
/// zigzag rings of ten vertices, then a bottom 5-cycle, so n = 20 + 10k.
inline FullereneGraph construct_nanotube(int k) {
    if (k < 1) throw std::invalid_argument("nanotube needs k >= 1");
    const int rings = k + 1;
    const int n = 20 + 10 * k;
    auto top = [](int i) { return (i + 5) % 5; };
    auto up = [](int ring, int i) { return 5 + 10 * ring + (i + 5) % 5; };
    auto down = [](int ring, int i) { return 10 + 10 * ring + (i + 5) % 5; };
    auto bottom = [&](int i) { return 5 + 10 * rings + (i + 5) % 5; };
    Rotation rot(n);
    for (int i = 0; i < 5; ++i) {
        rot[top(i)] = {top(i + 1), up(0, i), top(i - 1)};
        for (int r = 0; r < rings; ++r) {
            const int north = r == 0 ? top(i) : down(r - 1, i);
            rot[up(r, i)] = {north, down(r, i), down(r, i - 1)};
            const int south = r + 1 < rings ? up(r + 1, i) : bottom(i);
            rot[down(r, i)] = {up(r, i + 1), south, up(r, i)};
        }
        rot[bottom(i)] = {down(rings - 1, i), bottom(i + 1), bottom(i - 1)};
    }
    return FullereneGraph::build(std::move(rot));
}

}  // namespace resonantia
