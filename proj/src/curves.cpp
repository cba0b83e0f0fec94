#include "quadgraph/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadgraph {

namespace {

void require_distinct(uint64_t a, uint64_t b, uint64_t c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("curve parameters must be pairwise distinct");
}

}  // namespace

int64_t frobenius_trace(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c) {
    require_distinct(a, b, c);
    const uint64_t p = F.p();
    int64_t sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t prod = F.mul(F.mul(F.sub(x, a), F.sub(x, b)), F.sub(x, c));
        sum += F.chi(prod);
    }
    return -sum;
}

uint64_t leaf_count_closed3_with_trace(const PrimeField& F, uint64_t a, uint64_t b,
                                       uint64_t c, int64_t t) {
    require_distinct(a, b, c);
    const uint64_t p = F.p();
    int64_t chi_m1 = F.chi(p - 1);
    int64_t diff_sum =
        F.chi(F.sub(a, b)) + F.chi(F.sub(a, c)) + F.chi(F.sub(b, c));
    int64_t prod_sum = F.chi(F.mul(F.sub(a, b), F.sub(a, c))) +
                       F.chi(F.mul(F.sub(b, a), F.sub(b, c))) +
                       F.chi(F.mul(F.sub(c, a), F.sub(c, b)));
    int64_t numerator = static_cast<int64_t>(p) + (t - kClosed3Constant) +
                        (1 + chi_m1) * diff_sum - prod_sum;
    if (numerator < 0 || numerator % 8 != 0)
        throw std::logic_error("n=3 leaf-count numerator not a multiple of 8: " +
                               std::to_string(numerator));
    return static_cast<uint64_t>(numerator / 8);
}

uint64_t leaf_count_closed3(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c) {
    return leaf_count_closed3_with_trace(F, a, b, c, frobenius_trace(F, a, b, c));
}

double frobenius_angle(int64_t t, uint64_t p) {
    if (static_cast<__int128>(t) * t > 4 * static_cast<__int128>(p))
        throw std::invalid_argument("trace violates |t| <= 2*sqrt(p)");
    double x = static_cast<double>(t) / (2.0 * std::sqrt(static_cast<double>(p)));
    return std::acos(std::clamp(x, -1.0, 1.0));
}

double delta_from_leaf_count(uint64_t leaf_count, uint64_t p) {
    double pd = static_cast<double>(p);
    return (static_cast<double>(leaf_count) - pd / 8.0) / std::sqrt(pd);
}

double delta(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c) {
    return delta_from_leaf_count(leaf_count_closed3(F, a, b, c), F.p());
}

TraceRecord trace_record(const PrimeField& F, uint64_t a, uint64_t b, uint64_t c) {
    int64_t t = frobenius_trace(F, a, b, c);
    uint64_t L = leaf_count_closed3_with_trace(F, a, b, c, t);
    return {a, b, c, t, frobenius_angle(t, F.p()), delta_from_leaf_count(L, F.p())};
}

}  // namespace quadgraph
