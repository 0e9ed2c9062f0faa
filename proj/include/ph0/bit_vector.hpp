#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ph0 {

// GF(2) vector over {0..size-1} packed into 64-bit words; the symmetric
// difference is word-parallel. Word 0 holds bits 0..63.
class BitVector {
public:
    static constexpr std::uint32_t npos = 0xFFFFFFFFu;

    BitVector() = default;
    explicit BitVector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }

    void set(std::uint32_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    bool test(std::uint32_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool any() const {
        for (const std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    // Highest set bit, npos when empty.
    std::uint32_t top() const {
        for (std::size_t wi = words_.size(); wi-- > 0;) {
            if (words_[wi] != 0)
                return static_cast<std::uint32_t>(wi * 64 + 63 - std::countl_zero(words_[wi]));
        }
        return npos;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (const std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    void xor_with(const BitVector& other) {
        assert(size_ == other.size_);
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            words_[wi] ^= other.words_[wi];
    }

    // XOR restricted to words [word_begin, word_end); disjoint ranges can run
    // on concurrent lanes.
    void xor_word_range(const BitVector& other, std::size_t word_begin, std::size_t word_end) {
        assert(size_ == other.size_ && word_end <= words_.size());
        for (std::size_t wi = word_begin; wi < word_end; ++wi)
            words_[wi] ^= other.words_[wi];
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ph0
