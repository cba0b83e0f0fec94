#include "quadgraph/dist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "quadgraph/curves.hpp"
#include "quadgraph/rng.hpp"

namespace quadgraph {

namespace {

constexpr double kQuarter = 0.25;
constexpr double kEdgeEps = 1e-12;

unsigned resolve_workers(unsigned requested) {
    if (requested) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

double sin2_antiderivative(double t) { return (t - std::sin(t) * std::cos(t)) / 2.0; }

double semicircle_antiderivative(double z) {
    return (z * std::sqrt(1.0 - z * z) + std::asin(z)) / 2.0;
}

// Visits every unordered distinct triple a < b < c, partitioned by a.
template <typename Visit>
void scan_triples(const PrimeField& F, unsigned workers, Visit&& visit) {
    const uint64_t p = F.p();
    std::atomic<uint64_t> next{0};
    auto body = [&](unsigned wid) {
        for (;;) {
            uint64_t a = next.fetch_add(1);
            if (a + 2 >= p) break;
            for (uint64_t b = a + 1; b < p; ++b)
                for (uint64_t c = b + 1; c < p; ++c) visit(wid, a, b, c);
        }
    };
    if (workers <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
}

double triple_delta(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c) {
    int64_t t = frobenius_trace(F, a, b, c);
    return delta_from_leaf_count(leaf_count_closed3_with_trace(F, a, b, c, t), F.p());
}

// Draw an ordered pairwise-distinct triple from the per-sample stream.
void sample_triple(SplitMix64& g, uint64_t p, uint64_t& a, uint64_t& b, uint64_t& c) {
    a = g.below(p);
    do b = g.below(p); while (b == a);
    do c = g.below(p); while (c == a || c == b);
}

void check_triple_budget(const PrimeField& F, uint64_t budget) {
    unsigned __int128 visits =
        static_cast<unsigned __int128>(binomial(F.p(), 3)) * F.p();
    if (visits > budget)
        throw BudgetError("exhaustive triple scan needs " +
                          std::to_string(static_cast<double>(visits)) +
                          " vertex-visits (budget " + std::to_string(budget) +
                          "); use sampled mode");
}

void fill_theoretical(DeltaHistogram& H) {
    H.theoretical.assign(H.bins, 0.0);
    for (uint64_t i = 0; i < H.bins; ++i) {
        double lo = std::max(H.edge(i), -kQuarter);
        double hi = std::min(H.edge(i + 1), kQuarter);
        if (lo < hi) H.theoretical[i] = rho_theoretical(lo, hi);
    }
    H.conjectural = H.p == 3;
}

uint64_t bin_index(const DeltaHistogram& H, double delta) {
    double w = (H.hi - H.lo) / static_cast<double>(H.bins);
    double raw = std::floor((delta - H.lo) / w);
    if (raw < 0) return 0;
    if (raw >= static_cast<double>(H.bins)) return H.bins - 1;
    return static_cast<uint64_t>(raw);
}

DeltaHistogram make_histogram(const PrimeField& F, const DistOptions& opt) {
    if (F.p() < 3) throw std::invalid_argument("need p >= 3");
    if (opt.bins < 1 || opt.lo >= opt.hi)
        throw std::invalid_argument("invalid histogram binning");
    DeltaHistogram H;
    H.p = F.p();
    H.lo = opt.lo;
    H.hi = opt.hi;
    H.bins = opt.bins;
    H.empirical.assign(opt.bins, 0.0);
    fill_theoretical(H);
    return H;
}

}  // namespace

double sato_tate_mass(double alpha, double beta) {
    if (!(0.0 <= alpha && alpha <= beta && beta <= std::numbers::pi + kEdgeEps))
        throw std::invalid_argument("need 0 <= alpha <= beta <= pi");
    return 2.0 / std::numbers::pi *
           (sin2_antiderivative(std::min(beta, std::numbers::pi)) -
            sin2_antiderivative(alpha));
}

double rho_theoretical(double sigma, double tau) {
    if (!(-kQuarter - kEdgeEps <= sigma && sigma <= tau && tau <= kQuarter + kEdgeEps))
        throw std::invalid_argument("need -1/4 <= sigma <= tau <= 1/4");
    double zlo = std::clamp(4.0 * sigma, -1.0, 1.0);
    double zhi = std::clamp(4.0 * tau, -1.0, 1.0);
    return 2.0 / std::numbers::pi *
           (semicircle_antiderivative(zhi) - semicircle_antiderivative(zlo));
}

DeltaHistogram delta_histogram_exhaustive(const PrimeField& F, const DistOptions& opt) {
    check_triple_budget(F, opt.budget);
    DeltaHistogram H = make_histogram(F, opt);
    H.mode = "exhaustive";

    const unsigned workers = resolve_workers(opt.workers);
    std::vector<std::vector<uint64_t>> counts(workers,
                                              std::vector<uint64_t>(H.bins, 0));
    scan_triples(F, workers, [&](unsigned wid, uint64_t a, uint64_t b, uint64_t c) {
        counts[wid][bin_index(H, triple_delta(F, a, b, c))]++;
    });

    uint64_t total = binomial(F.p(), 3);
    for (uint64_t i = 0; i < H.bins; ++i) {
        uint64_t c = 0;
        for (unsigned w = 0; w < workers; ++w) c += counts[w][i];
        H.empirical[i] = static_cast<double>(c) / static_cast<double>(total);
    }
    return H;
}

DeltaHistogram delta_histogram_sampled(const PrimeField& F, uint64_t samples,
                                       uint64_t seed, const DistOptions& opt) {
    if (F.p() < 5) throw std::invalid_argument("sampled mode needs p >= 5");
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    DeltaHistogram H = make_histogram(F, opt);
    H.mode = "sampled";
    H.seed = seed;
    H.samples = samples;

    const unsigned workers = resolve_workers(opt.workers);
    std::vector<std::vector<uint64_t>> counts(workers,
                                              std::vector<uint64_t>(H.bins, 0));
    std::atomic<uint64_t> next{0};
    auto body = [&](unsigned wid) {
        for (;;) {
            uint64_t s = next.fetch_add(1);
            if (s >= samples) break;
            SplitMix64 g = SplitMix64::stream(seed, s);
            uint64_t a, b, c;
            sample_triple(g, F.p(), a, b, c);
            counts[wid][bin_index(H, triple_delta(F, a, b, c))]++;
        }
    };
    if (workers <= 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }

    for (uint64_t i = 0; i < H.bins; ++i) {
        uint64_t c = 0;
        for (unsigned w = 0; w < workers; ++w) c += counts[w][i];
        H.empirical[i] = static_cast<double>(c) / static_cast<double>(samples);
    }
    return H;
}

double rho_empirical_exhaustive(const PrimeField& F, double sigma, double tau,
                                const DistOptions& opt) {
    if (F.p() < 5) throw std::invalid_argument("need p >= 5");
    if (sigma > tau) throw std::invalid_argument("need sigma <= tau");
    check_triple_budget(F, opt.budget);

    const unsigned workers = resolve_workers(opt.workers);
    std::vector<uint64_t> hits(workers, 0);
    scan_triples(F, workers, [&](unsigned wid, uint64_t a, uint64_t b, uint64_t c) {
        double d = triple_delta(F, a, b, c);
        if (sigma <= d && d <= tau) hits[wid]++;
    });
    uint64_t in = 0;
    for (uint64_t h : hits) in += h;
    // Unordered count times 6 over p(p-1)(p-2) = count over C(p,3).
    return static_cast<double>(in) / static_cast<double>(binomial(F.p(), 3));
}

double rho_empirical_sampled(const PrimeField& F, double sigma, double tau,
                             uint64_t samples, uint64_t seed, const DistOptions& opt) {
    if (F.p() < 5) throw std::invalid_argument("need p >= 5");
    if (sigma > tau) throw std::invalid_argument("need sigma <= tau");
    if (samples == 0) throw std::invalid_argument("need at least one sample");

    const unsigned workers = resolve_workers(opt.workers);
    std::vector<uint64_t> hits(workers, 0);
    std::atomic<uint64_t> next{0};
    auto body = [&](unsigned wid) {
        for (;;) {
            uint64_t s = next.fetch_add(1);
            if (s >= samples) break;
            SplitMix64 g = SplitMix64::stream(seed, s);
            uint64_t a, b, c;
            sample_triple(g, F.p(), a, b, c);
            double d = triple_delta(F, a, b, c);
            if (sigma <= d && d <= tau) hits[wid]++;
        }
    };
    if (workers <= 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    uint64_t in = 0;
    for (uint64_t h : hits) in += h;
    return static_cast<double>(in) / static_cast<double>(samples);
}

double sup_cdf_deviation(const DeltaHistogram& H) {
    double below = 0, above = 0;
    std::vector<double> middle(H.bins, 0.0);
    for (uint64_t i = 0; i < H.bins; ++i) {
        if (H.edge(i + 1) <= -kQuarter + kEdgeEps)
            below += H.empirical[i];
        else if (H.edge(i) >= kQuarter - kEdgeEps)
            above += H.empirical[i];
        else
            middle[i] = H.empirical[i];
    }

    double dev = 0.0;
    for (uint64_t j = 0; j <= H.bins; ++j) {
        double e = H.edge(j);
        double emp = 0.0;
        if (e >= -kQuarter - kEdgeEps) emp += below;
        if (e >= kQuarter - kEdgeEps) emp += above;
        for (uint64_t i = 0; i < H.bins; ++i)
            if (middle[i] != 0.0 && H.edge(i + 1) <= e + kEdgeEps) emp += middle[i];
        double theo = e <= -kQuarter ? 0.0
                                     : rho_theoretical(-kQuarter, std::min(e, kQuarter));
        dev = std::max(dev, std::abs(emp - theo));
    }
    return dev;
}

}  // namespace quadgraph
