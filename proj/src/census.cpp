#include "quadgraph/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "quadgraph/leaves.hpp"
#include "quadgraph/rng.hpp"

namespace quadgraph {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;   // exact: r is C(n-k+i, i) after each step
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<uint64_t>(r);
}

namespace {

constexpr uint64_t kRowMemoryLimit = uint64_t{256} << 20;

std::string u128_str(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

void check_budget(uint64_t families, uint64_t p, uint64_t budget, const char* advice) {
    unsigned __int128 visits = static_cast<unsigned __int128>(families) * p;
    if (families == UINT64_MAX || visits > budget)
        throw BudgetError("estimated cost " +
                          (families == UINT64_MAX ? std::string(">2^64")
                                                  : u128_str(visits)) +
                          " vertex-visits exceeds budget " + std::to_string(budget) +
                          "; " + advice);
}

unsigned resolve_workers(unsigned requested) {
    if (requested) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// All p cyclic rotations of the square-value indicator row.
struct Kernel {
    const PrimeField& F;
    std::vector<BitRow> rows;

    explicit Kernel(const PrimeField& field) : F(field) {
        const uint64_t p = F.p();
        const uint64_t words = (p + 63) / 64;
        if (!F.has_table() || p * words * 8 > kRowMemoryLimit)
            throw BudgetError("p = " + std::to_string(p) +
                              " too large for the enumeration kernel's rotation table");
        rows.reserve(p);
        for (uint64_t a = 0; a < p; ++a) rows.push_back(F.squares().rotated(a));
    }
};

struct WorkerState {
    std::vector<BitRow> stack;       // stack[d] = OR of the first d chosen rows
    std::vector<uint64_t> chosen;
    uint64_t emitted = 0;

    WorkerState(uint64_t p, uint64_t depth) : stack(depth + 1, BitRow(p)) {
        chosen.reserve(depth);
    }
};

// Lexicographic enumeration of m-subsets of universe[start..]; emit receives
// the leaf count and the chosen shifts (prefix shifts excluded).
template <typename Emit>
void enum_rest(const Kernel& K, const std::vector<uint64_t>& universe, size_t start,
               size_t m, WorkerState& st, size_t depth, Emit&& emit) {
    if (m == 0) {
        ++st.emitted;
        emit(st.stack[depth].count_zeros(), st.chosen);
        return;
    }
    for (size_t i = start; i + m <= universe.size(); ++i) {
        BitRow::or_into(st.stack[depth + 1], st.stack[depth], K.rows[universe[i]]);
        st.chosen.push_back(universe[i]);
        enum_rest(K, universe, i + 1, m - 1, st, depth + 1, emit);
        st.chosen.pop_back();
    }
}

// Dynamic partition of [0, tops) across workers; merge order never affects
// the result because per-worker histograms are summed key-wise.
template <typename Task>
void run_partitioned(unsigned workers, uint64_t tops, Task&& task) {
    if (workers <= 1 || tops <= 1) {
        for (uint64_t i = 0; i < tops; ++i) task(0, i);
        return;
    }
    std::atomic<uint64_t> next{0};
    auto body = [&](unsigned wid) {
        for (;;) {
            uint64_t i = next.fetch_add(1);
            if (i >= tops) break;
            task(wid, i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
}

void validate_family_size(const PrimeField& F, uint64_t n) {
    if (n < 1 || n > F.p())
        throw std::invalid_argument("family size must lie in [1, p]");
}

}  // namespace

LeafHistogram census_brute(const PrimeField& F, uint64_t n, const CensusOptions& opt) {
    validate_family_size(F, n);
    const uint64_t p = F.p();
    const uint64_t families = binomial(p, n);
    check_budget(families, p, opt.budget,
                 "use the reduced census or sampling, or raise QUADGRAPH_BUDGET");

    Kernel K(F);
    const unsigned workers = resolve_workers(opt.workers);
    std::vector<LeafHistogram> parts(workers);
    std::vector<WorkerState> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        parts[w].bucket = opt.bucket;
        states.emplace_back(p, n);
    }

    std::vector<uint64_t> universe(p);
    std::iota(universe.begin(), universe.end(), 0);

    run_partitioned(workers, p, [&](unsigned wid, uint64_t i) {
        if (i + n > p) return;
        WorkerState& st = states[wid];
        BitRow::or_into(st.stack[1], st.stack[0], K.rows[i]);
        st.chosen.assign(1, i);
        enum_rest(K, universe, i + 1, n - 1, st, 1,
                  [&](uint64_t leaves, const std::vector<uint64_t>&) {
                      parts[wid].add(leaves);
                  });
        st.chosen.clear();
    });

    LeafHistogram out;
    out.p = p;
    out.n = n;
    out.bucket = opt.bucket;
    out.method = "brute";
    for (const auto& part : parts) out.merge_from(part);
    if (out.total != families)
        throw std::logic_error("brute census enumerated " + std::to_string(out.total) +
                               " families, expected " + std::to_string(families));
    return out;
}

ReducedCensus census_reduced(const PrimeField& F, uint64_t n, const CensusOptions& opt) {
    validate_family_size(F, n);
    const uint64_t p = F.p();
    const uint64_t lambda = F.lambda();
    const uint64_t expected =
        binomial(p - 1, n - 1) + binomial(p - 2, n - 1) + binomial(p - 3, n - 1);
    check_budget(expected, p, opt.budget, "use sampling or raise QUADGRAPH_BUDGET");

    Kernel K(F);
    const unsigned workers = resolve_workers(opt.workers);

    struct Branch {
        uint64_t first;
        std::vector<uint64_t> universe;
    };
    std::vector<Branch> branches(3);
    branches[0].first = 0;
    for (uint64_t v = 1; v < p; ++v) branches[0].universe.push_back(v);
    branches[1].first = 1;
    for (uint64_t v = 2; v < p; ++v) branches[1].universe.push_back(v);
    branches[2].first = lambda;
    for (uint64_t v = 2; v < p; ++v)
        if (v != lambda) branches[2].universe.push_back(v);

    // parts[w][b] accumulates branch b's primary histogram; partsBL[w] the
    // lambda-overlap of branch 1 (families containing both 1 and lambda).
    std::vector<std::array<LeafHistogram, 3>> parts(workers);
    std::vector<LeafHistogram> parts_overlap(workers);
    std::vector<WorkerState> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        for (auto& h : parts[w]) h.bucket = opt.bucket;
        parts_overlap[w].bucket = opt.bucket;
        states.emplace_back(p, n);
    }

    if (n == 1) {
        for (int b = 0; b < 3; ++b) {
            uint64_t leaves = K.rows[branches[b].first].count_zeros();
            parts[0][b].add(leaves);
            ++states[0].emitted;
        }
    } else {
        // Flatten (branch, top index) pairs into one task range.
        std::array<uint64_t, 3> tops{};
        std::array<uint64_t, 3> offset{};
        uint64_t total_tops = 0;
        for (int b = 0; b < 3; ++b) {
            offset[b] = total_tops;
            tops[b] = branches[b].universe.size();
            total_tops += tops[b];
        }
        run_partitioned(workers, total_tops, [&](unsigned wid, uint64_t g) {
            int b = g >= offset[2] ? 2 : (g >= offset[1] ? 1 : 0);
            uint64_t i = g - offset[b];
            const Branch& br = branches[b];
            if (i + (n - 1) > br.universe.size()) return;
            WorkerState& st = states[wid];
            BitRow::or_into(st.stack[1], st.stack[0], K.rows[br.first]);
            BitRow::or_into(st.stack[2], st.stack[1], K.rows[br.universe[i]]);
            st.chosen.assign(1, br.universe[i]);
            enum_rest(K, br.universe, i + 1, n - 2, st, 2,
                      [&](uint64_t leaves, const std::vector<uint64_t>& chosen) {
                          parts[wid][b].add(leaves);
                          if (b == 1 &&
                              std::find(chosen.begin(), chosen.end(), lambda) !=
                                  chosen.end())
                              parts_overlap[wid].add(leaves);
                      });
            st.chosen.clear();
        });
    }

    ReducedCensus R;
    for (LeafHistogram* h : {&R.h0, &R.h1, &R.hlambda}) {
        h->p = p;
        h->n = n;
        h->bucket = opt.bucket;
        h->method = "reduced";
    }
    uint64_t emitted = 0;
    for (unsigned w = 0; w < workers; ++w) {
        R.h0.merge_from(parts[w][0]);
        R.h1.merge_from(parts[w][1]);
        R.hlambda.merge_from(parts[w][2]);
        R.hlambda.merge_from(parts_overlap[w]);
        emitted += states[w].emitted;
    }
    R.families_enumerated = emitted;
    if (emitted != expected)
        throw std::logic_error("reduced census enumerated " + std::to_string(emitted) +
                               " families, expected " + std::to_string(expected));
    return R;
}

LeafHistogram aggregate(const ReducedCensus& R, uint64_t p, uint64_t n) {
    if (R.h0.p != p || R.h0.n != n)
        throw std::invalid_argument("reduced census was built for different (p, n)");
    LeafHistogram out;
    out.p = p;
    out.n = n;
    out.bucket = R.h0.bucket;
    out.method = "reduced";

    std::set<uint64_t> keys;
    for (const LeafHistogram* h : {&R.h0, &R.h1, &R.hlambda})
        for (auto [k, c] : h->counts) keys.insert(k);

    auto at = [](const LeafHistogram& h, uint64_t k) -> uint64_t {
        auto it = h.counts.find(k);
        return it == h.counts.end() ? 0 : it->second;
    };
    for (uint64_t k : keys) {
        unsigned __int128 scaled =
            static_cast<unsigned __int128>(p - 1) * (at(R.h1, k) + at(R.hlambda, k));
        if (scaled % (2 * n) != 0)
            throw std::logic_error("orbit identity division not exact at k = " +
                                   std::to_string(k));
        uint64_t nk = at(R.h0, k) + static_cast<uint64_t>(scaled / (2 * n));
        if (nk) {
            out.counts[k] = nk;
            out.total += nk;
        }
    }
    if (uint64_t expect = binomial(p, n); out.total != expect)
        throw std::logic_error("aggregated census total " + std::to_string(out.total) +
                               " != C(p,n) = " + std::to_string(expect));
    return out;
}

LeafHistogram census_sample(const PrimeField& F, uint64_t n, uint64_t samples,
                            uint64_t seed, const CensusOptions& opt) {
    validate_family_size(F, n);
    const uint64_t p = F.p();
    check_budget(samples, p, opt.budget, "reduce the sample size or raise QUADGRAPH_BUDGET");

    Kernel K(F);
    const unsigned workers = resolve_workers(opt.workers);
    std::vector<LeafHistogram> parts(workers);
    std::vector<WorkerState> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        parts[w].bucket = opt.bucket;
        states.emplace_back(p, 1);
    }

    run_partitioned(workers, samples, [&](unsigned wid, uint64_t s) {
        SplitMix64 g = SplitMix64::stream(seed, s);
        // Floyd's subset sampling: uniform over n-subsets in n draws.
        std::vector<uint64_t> fam;
        fam.reserve(n);
        for (uint64_t j = p - n; j < p; ++j) {
            uint64_t t = g.below(j + 1);
            if (std::find(fam.begin(), fam.end(), t) != fam.end()) t = j;
            fam.push_back(t);
        }
        WorkerState& st = states[wid];
        st.stack[0].reset_all();
        for (uint64_t a : fam) st.stack[0] |= K.rows[a];
        parts[wid].add(st.stack[0].count_zeros());
    });

    LeafHistogram out;
    out.p = p;
    out.n = n;
    out.bucket = opt.bucket;
    out.method = "sampled";
    out.estimate = true;
    out.seed = seed;
    out.samples = samples;
    for (const auto& part : parts) out.merge_from(part);
    return out;
}

std::pair<uint64_t, uint64_t> min_max_leaves(const PrimeField& F, uint64_t n,
                                             const CensusOptions& opt) {
    CensusOptions o = opt;
    o.bucket.reset();
    ReducedCensus R = census_reduced(F, n, o);
    uint64_t lo = UINT64_MAX, hi = 0;
    for (const LeafHistogram* h : {&R.h0, &R.h1, &R.hlambda}) {
        if (h->counts.empty()) continue;
        lo = std::min(lo, h->counts.begin()->first);
        hi = std::max(hi, h->counts.rbegin()->first);
    }
    return {lo, hi};
}

std::vector<ProportionRow> proportions(const LeafHistogram& H) {
    if (H.total == 0)
        throw std::invalid_argument("histogram is empty");
    std::vector<ProportionRow> rows;
    rows.reserve(H.counts.size());
    for (auto [k, c] : H.counts) {
        double pct =
            std::llround(static_cast<double>(c) * 10000.0 / static_cast<double>(H.total)) /
            100.0;
        rows.push_back({H.bucket && k == *H.bucket, k, pct});
    }
    return rows;
}

}  // namespace quadgraph
