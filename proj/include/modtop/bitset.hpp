#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace modtop {

/// Fixed-capacity dynamic bitset used both for element sets inside a module
/// and for point sets inside a structure space.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// Set difference: bits of *this not in o.
    Bitset minus(const Bitset& o) const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }
    /// Complement within the declared capacity.
    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        std::size_t tail = nbits_ & 63;
        if (tail && !r.words_.empty()) r.words_.back() &= (std::uint64_t{1} << tail) - 1;
        return r;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Total order: cardinality first, then "smallest differing element wins".
    /// Gives the canonical enumeration order used everywhere.
    bool operator<(const Bitset& o) const {
        std::size_t ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) return words_[i] & (d & -d);  // lowest differing bit belongs to the smaller set
        }
        return false;
    }

    std::vector<std::size_t> bits() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) { h ^= w; h *= 1099511628211ull; }
        return static_cast<std::size_t>(h ^ nbits_);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace modtop
