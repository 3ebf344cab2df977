#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gcm {

// Fixed-size bit set sized at runtime. Used for adjacency rows and
// candidate sets in clique search; kept minimal on purpose.
class DynBitset {
  public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator-=(const DynBitset& o) { // set difference
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::size_t and_count(const DynBitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // Index of the lowest set bit, or size() when empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (i << 6) + std::countr_zero(words_[i]);
        return nbits_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f((i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gcm
