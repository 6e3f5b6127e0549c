// Cut: a vertex subset as a compact bit-vector. FaultSet: a sorted set of
// vertex ids the adversary removes.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftcut/errors.hpp"

namespace ftcut {

class Cut {
public:
    Cut() = default;

    explicit Cut(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw ValidationError("negative cut dimension");
    }

    // n <= 64 convenience: bit v of mask set <=> v in S.
    static Cut from_mask(int n, std::uint64_t mask) {
        if (n > 64) throw ValidationError("mask constructor limited to n <= 64");
        Cut s(n);
        if (n > 0) {
            if (n < 64 && (mask >> n) != 0)
                throw ValidationError("mask has bits beyond vertex count");
            s.words_[0] = mask;
        } else if (mask != 0) {
            throw ValidationError("mask has bits beyond vertex count");
        }
        return s;
    }

    static Cut from_vertices(int n, std::span<const int> vs) {
        Cut s(n);
        for (int v : vs) {
            if (v < 0 || v >= n) throw ValidationError("cut vertex id out of range");
            s.set(v, true);
        }
        return s;
    }

    int n() const { return n_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

    void set(int v, bool in) {
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (in)
            words_[v >> 6] |= bit;
        else
            words_[v >> 6] &= ~bit;
    }

    void toggle(int v) {
        if (v < 0 || v >= n_) throw ValidationError("flip: vertex id out of range");
        words_[v >> 6] ^= std::uint64_t{1} << (v & 63);
    }

    int cardinality() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    Cut complemented() const {
        Cut s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        int tail = n_ & 63;
        if (tail != 0 && !s.words_.empty())
            s.words_.back() &= (std::uint64_t{1} << tail) - 1;
        return s;
    }

    std::vector<int> members() const {
        std::vector<int> vs;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) vs.push_back(v);
        return vs;
    }

    std::string to_string() const {
        std::string out = "[";
        bool first = true;
        for (int v = 0; v < n_; ++v) {
            if (!contains(v)) continue;
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += ']';
        return out;
    }

    friend bool operator==(const Cut& a, const Cut& b) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline Cut flip(Cut s, int v) {
    s.toggle(v);
    return s;
}

class FaultSet {
public:
    FaultSet() = default;

    explicit FaultSet(std::vector<int> vs) : members_(std::move(vs)) {
        std::sort(members_.begin(), members_.end());
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 0) throw ValidationError("fault set with negative vertex id");
            if (i > 0 && members_[i] == members_[i - 1])
                throw ValidationError("fault set with duplicate vertex id");
        }
    }

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(members_[i]);
        }
        out += ']';
        return out;
    }

    friend bool operator==(const FaultSet& a, const FaultSet& b) = default;

private:
    std::vector<int> members_;
};

} // namespace ftcut
