#pragma once

// Canonical codes for fullerene graphs.
//
// A 3-connected planar graph has a unique embedding up to reflection, so a
// breadth-first numbering started from every dart in both orientations, keeping
// the lexicographically smallest label sequence, is a complete invariant.

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace resonantia {

struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(2 * bytes.size());
        for (auto b : bytes) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 15]);
        }
        return out;
    }
};

namespace detail {

// Rotation system with arbitrary degrees: rot[v] is the cyclic neighbor order.
template <typename Rot>
class EmbeddingCoder {
public:
    explicit EmbeddingCoder(const Rot& rot) : rot_(rot), label_(rot.size()), entry_(rot.size()) {
        queue_.reserve(rot.size());
    }

    /// Smallest BFS code over every start dart and both orientations. Each
    /// vertex contributes the labels of its neighbors followed by a 0.
    std::vector<std::uint8_t> smallest() {
        best_.clear();
        for (int v = 0; v < static_cast<int>(rot_.size()); ++v)
            for (int slot = 0; slot < static_cast<int>(rot_[v].size()); ++slot)
                for (int dir : {1, -1})
                    if (run(v, slot, dir)) best_.swap(code_);
        return best_;
    }

private:
    int slot_of(int v, int u) const {
        const auto& r = rot_[v];
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (r[i] == u) return i;
        return -1;
    }

    // Writes the code for one start into code_, giving up as soon as it
    // exceeds best_. Returns true when the result is smaller than best_.
    bool run(int start, int first_slot, int dir) {
        std::fill(label_.begin(), label_.end(), 0);
        code_.clear();
        queue_.clear();
        int next_label = 1;
        label_[start] = next_label++;
        entry_[start] = first_slot;
        queue_.push_back(start);
        bool smaller = best_.empty();
        auto emit = [&](std::uint8_t byte) {
            if (!smaller) {
                const std::size_t i = code_.size();
                if (byte > best_[i]) return false;
                if (byte < best_[i]) smaller = true;
            }
            code_.push_back(byte);
            return true;
        };
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int x = queue_[head];
            const int deg = static_cast<int>(rot_[x].size());
            for (int j = 0; j < deg; ++j) {
                const int y = rot_[x][((entry_[x] + dir * j) % deg + deg) % deg];
                if (label_[y] == 0) {
                    label_[y] = next_label++;
                    entry_[y] = slot_of(y, x);
                    queue_.push_back(y);
                }
                if (!emit(static_cast<std::uint8_t>(label_[y]))) return false;
            }
            if (!emit(0)) return false;
        }
        return smaller;
    }

    const Rot& rot_;
    std::vector<int> label_, entry_, queue_;
    std::vector<std::uint8_t> code_, best_;
};

}  // namespace detail

/// Canonical code of an arbitrary connected rotation system (vertex count < 256).
template <typename Rot>
CanonicalCode embedding_code(const Rot& rot) {
    CanonicalCode out;
    out.bytes.push_back(static_cast<std::uint8_t>(rot.size()));
    auto body = detail::EmbeddingCoder<Rot>(rot).smallest();
    out.bytes.insert(out.bytes.end(), body.begin(), body.end());
    return out;
}

inline CanonicalCode canonical_form(const FullereneGraph& g) { return embedding_code(g.rotation()); }

inline bool isomorphic(const FullereneGraph& a, const FullereneGraph& b) {
    return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

}  // namespace resonantia
