#include "quadgraph/bitrow.hpp"

#include <bit>
#include <stdexcept>

namespace quadgraph {

void BitRow::clear_top_() {
    unsigned rem = nbits_ & 63;
    if (rem != 0 && !words_.empty())
        words_.back() &= (uint64_t{1} << rem) - 1;
}

uint64_t BitRow::count() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

uint64_t BitRow::count_and(const BitRow& other) const {
    uint64_t c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

BitRow BitRow::rotated(uint64_t k) const {
    k %= nbits_;
    BitRow out(nbits_);
    if (k == 0) {
        out.words_ = words_;
        return out;
    }
    // Shift into a double-length scratch, then fold bits >= nbits back down.
    std::vector<uint64_t> ext(2 * words_.size() + 1, 0);
    size_t ws = k >> 6;
    unsigned bs = k & 63;
    for (size_t i = 0; i < words_.size(); ++i) {
        ext[i + ws] |= bs ? (words_[i] << bs) : words_[i];
        if (bs) ext[i + ws + 1] |= words_[i] >> (64 - bs);
    }
    size_t fs = nbits_ >> 6;
    unsigned fb = nbits_ & 63;
    for (size_t i = 0; i < out.words_.size(); ++i) {
        uint64_t wrapped = ext[i + fs] >> fb;
        if (fb && i + fs + 1 < ext.size()) wrapped |= ext[i + fs + 1] << (64 - fb);
        out.words_[i] = ext[i] | wrapped;
    }
    out.clear_top_();
    return out;
}

void BitRow::or_into(BitRow& dst, const BitRow& a, const BitRow& b) {
    for (size_t i = 0; i < dst.words_.size(); ++i)
        dst.words_[i] = a.words_[i] | b.words_[i];
}

BitRow& BitRow::operator|=(const BitRow& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitRow& BitRow::operator&=(const BitRow& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitRow& BitRow::and_not(const BitRow& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

}  // namespace quadgraph
