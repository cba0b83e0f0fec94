#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadgraph/census.hpp"
#include "quadgraph/errors.hpp"
#include "quadgraph/field.hpp"

namespace quadgraph {

// Mass of [alpha, beta] under the sin^2 angle density, in closed form:
// (2/pi) * [(theta - sin(theta)cos(theta)) / 2] evaluated at the endpoints.
double sato_tate_mass(double alpha, double beta);

// Semicircle mass (2/pi) * int_{4 sigma}^{4 tau} sqrt(1 - z^2) dz for
// [sigma, tau] inside [-1/4, 1/4], via the closed-form antiderivative.
double rho_theoretical(double sigma, double tau);

// Binned empirical distribution of the normalized leaf deviation over all
// ordered pairwise-distinct triples, with the matching per-bin theoretical
// masses.  Values outside the bin range land in the edge bins.
struct DeltaHistogram {
    uint64_t p = 0;
    double lo = -0.30;
    double hi = 0.30;
    uint64_t bins = 60;
    std::vector<double> empirical;
    std::vector<double> theoretical;
    std::string mode;               // exhaustive | sampled
    uint64_t seed = 0;
    uint64_t samples = 0;
    bool conjectural = false;       // theoretical overlay untreated at p = 3

    double edge(uint64_t i) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    }
};

struct DistOptions {
    uint64_t bins = 60;
    double lo = -0.30;
    double hi = 0.30;
    uint64_t budget = kDefaultBudget;
    unsigned workers = 0;
};

// Every unordered triple once, weight 6 (the deviation is symmetric).
// Throws BudgetError with a pointer to sampled mode when C(p,3)*p is too big.
DeltaHistogram delta_histogram_exhaustive(const PrimeField& F,
                                          const DistOptions& opt = {});

// Uniform ordered distinct triples, one RNG stream per sample index.
DeltaHistogram delta_histogram_sampled(const PrimeField& F, uint64_t samples,
                                       uint64_t seed, const DistOptions& opt = {});

// Fraction of ordered distinct triples whose deviation lies in [sigma, tau].
double rho_empirical_exhaustive(const PrimeField& F, double sigma, double tau,
                                const DistOptions& opt = {});
double rho_empirical_sampled(const PrimeField& F, double sigma, double tau,
                             uint64_t samples, uint64_t seed,
                             const DistOptions& opt = {});

// Kolmogorov-style statistic: max over bin edges of the gap between the
// empirical and theoretical CDFs, with empirical mass outside [-1/4, 1/4]
// snapped to the nearest endpoint.
double sup_cdf_deviation(const DeltaHistogram& H);

}  // namespace quadgraph
