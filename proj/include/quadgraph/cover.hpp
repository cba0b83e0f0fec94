#pragma once

#include <cstdint>
#include <vector>

#include "quadgraph/field.hpp"
#include "quadgraph/leaves.hpp"

namespace quadgraph {

// Result of the greedy leafless construction.  residuals[i] is the number of
// still-uncovered vertices after adding shifts[i]; it halves at every step
// and must reach 0 within ceil(log2 p) shifts.
struct CoverReport {
    uint64_t p = 0;
    std::vector<uint64_t> shifts;      // a_1 = 0 first, then greedy choices
    std::vector<uint64_t> residuals;
    bool leafless = false;
};

// Shift a maximizing |S meet (Q_p + a)|, ties broken by smallest a.  The
// average over all a equals |S|/2, so the maximum is always >= |S|/2.
// Throws on empty S.  Returns the shift and its coverage.
struct CoverShift {
    uint64_t a;
    uint64_t covered;
};
CoverShift best_cover_shift(const PrimeField& F, const BitRow& S);

// Start from a_1 = 0, repeatedly remove the best-covering translate from the
// residual until it is empty; verifies the union covers F_p, the per-step
// halving, and the ceil(log2 p) size bound (std::logic_error on violation,
// which would indicate a kernel bug).
CoverReport greedy_leafless(const PrimeField& F);

// True iff the translates Q_p + a_i cover all of F_p (no leaf exists).
bool verify_leafless(const ShiftFamily& fam);

// True guarantees that every size-n family over F_p has a leaf:
//   n^2 * 2^(4n-4) < p, or p = 3 (mod 4) and n^2 * 2^(2n-2) < p.
bool leaf_guarantee_threshold(uint64_t n, uint64_t p);

// Exact |intersection of the translates Q_p + a_i| together with its
// deviation from p / 2^n.
struct IntersectionCount {
    uint64_t count;
    double deviation;    // |count - p/2^n|
};
IntersectionCount intersect_shifted_squares(const ShiftFamily& fam);

inline uint64_t log2_ceiling(uint64_t p) {
    uint64_t b = 0;
    while ((uint64_t{1} << b) < p) ++b;
    return b;
}

}  // namespace quadgraph
