#pragma once

#include <cstdint>

#include "quadgraph/field.hpp"

namespace quadgraph {

// Constant term of the n=3 leaf-count formula.  Fixed by exhaustive
// agreement with the scan counter over every triple for all primes
// p <= 61 (acceptance suite criterion 3; `quadgraph verify --suite
// closed-forms` reruns the resolution).
inline constexpr int64_t kClosed3Constant = 6;

// Frobenius trace of Y^2 = (X-a)(X-b)(X-c): the negated character sum
// -sum_x chi((x-a)(x-b)(x-c)), equal to p + 1 minus the projective point
// count.  O(p) with table lookups.  Throws on non-distinct inputs.
int64_t frobenius_trace(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c);

// n = 3 closed form via the trace.  Throws std::logic_error if the formula
// numerator is not divisible by 8 (would indicate a kernel bug).
uint64_t leaf_count_closed3(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c);

// Same, reusing an already computed trace.
uint64_t leaf_count_closed3_with_trace(const PrimeField& F, uint64_t a, uint64_t b,
                                       uint64_t c, int64_t t);

// psi = arccos(t / (2*sqrt(p))) in [0, pi].  Rejects |t| > 2*sqrt(p).
double frobenius_angle(int64_t t, uint64_t p);

// Normalized leaf deviation (L - p/8) / sqrt(p).
double delta(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c);
double delta_from_leaf_count(uint64_t leaf_count, uint64_t p);

// One ordered distinct triple with its trace, angle, and deviation.
struct TraceRecord {
    uint64_t a, b, c;
    int64_t t;
    double psi;
    double dev;
};

TraceRecord trace_record(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c);

}  // namespace quadgraph
