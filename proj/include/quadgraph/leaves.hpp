#pragma once

#include <cstdint>
#include <vector>

#include "quadgraph/field.hpp"

namespace quadgraph {

// A set {a_1, ..., a_n} of pairwise distinct shifts over one prime field.
// Shifts are kept sorted ascending; duplicates are an input error.
class ShiftFamily {
public:
    ShiftFamily(const PrimeField& field, std::vector<uint64_t> shifts);

    const PrimeField& field() const { return *field_; }
    const std::vector<uint64_t>& shifts() const { return shifts_; }
    size_t n() const { return shifts_.size(); }

private:
    const PrimeField* field_;
    std::vector<uint64_t> shifts_;
};

// A vertex v is a leaf of the graph of X^2+a_1,...,X^2+a_n iff v - a_i is a
// non-square for every i, i.e. v lies outside the union of the translated
// square sets Q_p + a_i.

// Union of rotated square rows, answer = number of zero bits.  Requires the
// field's residue table; throws std::domain_error above the table budget.
uint64_t count_leaves_bitset(const ShiftFamily& fam);

// Per-vertex scan with early exit on the first covering shift.  Works for
// any p; same value as the bitset kernel where both apply.
uint64_t count_leaves_scan(const ShiftFamily& fam);

// n = 1: every field has exactly (p-1)/2 leaves, independent of the shift.
uint64_t leaf_count_closed1(const PrimeField& F, uint64_t a);

// n = 2 closed form, with k = floor(p/4):
//   p = 4k+1:  k + (chi(a-b) - 1)/2
//   p = 4k+3:  k
uint64_t leaf_count_closed2(const PrimeField& F, uint64_t a, uint64_t b);

// Open interval (p/2^n - c*n*sqrt(p), p/2^n + c*n*sqrt(p)) that contains
// every admissible leaf count; c = 1/2 for n < 2*sqrt(p), else 2/3.
struct LeafBound {
    double lower;
    double upper;
    bool contains(uint64_t count) const {
        double v = static_cast<double>(count);
        return lower < v && v < upper;
    }
};
LeafBound bound_count_n(const PrimeField& F, uint64_t n);

}  // namespace quadgraph
