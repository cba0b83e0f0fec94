#pragma once

#include <cstdint>
#include <vector>

namespace quadgraph {

// Fixed-length bit vector over positions 0..nbits-1 with cyclic rotation.
// Bits beyond nbits in the last word are kept zero.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(uint64_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    uint64_t size() const { return nbits_; }

    bool test(uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset_all() { std::fill(words_.begin(), words_.end(), 0); }

    uint64_t count() const;
    uint64_t count_and(const BitRow& other) const;   // popcount(*this & other)
    uint64_t count_zeros() const { return nbits_ - count(); }

    // Cyclic shift towards higher positions: out[(i + k) mod nbits] = in[i].
    BitRow rotated(uint64_t k) const;

    // dst = a | b, no allocation (dst must have the same size).
    static void or_into(BitRow& dst, const BitRow& a, const BitRow& b);

    BitRow& operator|=(const BitRow& other);
    BitRow& operator&=(const BitRow& other);
    // *this &= ~other
    BitRow& and_not(const BitRow& other);

    bool operator==(const BitRow& other) const = default;

    const std::vector<uint64_t>& words() const { return words_; }

private:
    uint64_t nbits_ = 0;
    std::vector<uint64_t> words_;

    void clear_top_();
};

}  // namespace quadgraph
