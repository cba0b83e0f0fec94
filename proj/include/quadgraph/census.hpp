#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadgraph/errors.hpp"
#include "quadgraph/field.hpp"

namespace quadgraph {

// Default kernel budget in vertex-visits (families examined times p).
inline constexpr uint64_t kDefaultBudget = 1'000'000'000;

// C(n, k), saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k);

// Distribution of leaf counts over a set of families: counts[k] = number of
// families with exactly k leaves.  With a bucket threshold T, every k >= T
// is merged under key T and reported as ">=T".
struct LeafHistogram {
    uint64_t p = 0;
    uint64_t n = 0;
    std::map<uint64_t, uint64_t> counts;
    std::optional<uint64_t> bucket;
    uint64_t total = 0;
    std::string method;        // brute | reduced | sampled
    bool estimate = false;     // true for sampled histograms
    uint64_t seed = 0;
    uint64_t samples = 0;

    void add(uint64_t k, uint64_t weight = 1) {
        if (bucket && k >= *bucket) k = *bucket;
        counts[k] += weight;
        total += weight;
    }
    void merge_from(const LeafHistogram& other) {
        for (auto [k, c] : other.counts) counts[k] += c;
        total += other.total;
    }
};

struct CensusOptions {
    std::optional<uint64_t> bucket;
    uint64_t budget = kDefaultBudget;
    unsigned workers = 0;      // 0 = hardware concurrency
};

// Exhaustive enumeration of all C(p, n) families in lexicographic order.
// Throws BudgetError when C(p,n)*p exceeds the budget.
LeafHistogram census_brute(const PrimeField& F, uint64_t n,
                           const CensusOptions& opt = {});

// Histograms restricted to families with first shift in {0, 1, lambda}:
// h0 counts families containing 0; h1 (resp. hlambda) counts families
// containing 1 (resp. lambda) with no zero shift.  A family containing both
// 1 and lambda is counted in both h1 and hlambda but its leaf kernel runs
// once, so families_enumerated = C(p-1,n-1) + C(p-2,n-1) + C(p-3,n-1).
struct ReducedCensus {
    LeafHistogram h0, h1, hlambda;
    uint64_t families_enumerated = 0;
};

ReducedCensus census_reduced(const PrimeField& F, uint64_t n,
                             const CensusOptions& opt = {});

// Scaling-orbit reconstruction of the full census:
//   N_k = N_k^0 + (p-1) * (N_k^1 + N_k^lambda) / (2n)
// The division must be exact; a remainder signals a kernel bug
// (std::logic_error).  The result's total is checked against C(p, n).
LeafHistogram aggregate(const ReducedCensus& R, uint64_t p, uint64_t n);

// Uniform random families, one splittable RNG stream per sample index, so
// the histogram is reproducible for a given seed at any worker count.
LeafHistogram census_sample(const PrimeField& F, uint64_t n, uint64_t samples,
                            uint64_t seed, const CensusOptions& opt = {});

// Extremal leaf counts over all families of size n (via the reduced
// enumeration, whose orbit closure reaches every family).
std::pair<uint64_t, uint64_t> min_max_leaves(const PrimeField& F, uint64_t n,
                                             const CensusOptions& opt = {});

struct ProportionRow {
    bool is_bucket;
    uint64_t k;
    double percent;   // rounded to 2 decimals
};

std::vector<ProportionRow> proportions(const LeafHistogram& H);

}  // namespace quadgraph
