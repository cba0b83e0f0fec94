#include "quadgraph/field.hpp"

#include <stdexcept>
#include <string>

namespace quadgraph {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 2^64 (Sorenson-Webster).
    for (uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!miller_rabin_witness(n, a, d, r)) return false;
    return true;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
    if (p < 3 || p >= kMaxPrime)
        throw std::invalid_argument("field modulus out of range [3, 2^61): " +
                                    std::to_string(p));
    if (p % 2 == 0)
        throw std::invalid_argument("field modulus must be odd: " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));

    if (p <= kTableLimit) {
        squares_ = BitRow(p);
        // j^2 and (p-j)^2 coincide; (p+1)/2 distinct values including 0.
        for (uint64_t j = 0; j <= p / 2; ++j) squares_.set(mul_mod(j, j, p));
    }

    for (uint64_t u = 2;; ++u) {
        if (!is_square(u)) {
            lambda_ = u;
            break;
        }
    }
}

int PrimeField::chi_table(uint64_t u) const {
    if (u == 0) return 0;
    return squares_.test(u) ? 1 : -1;
}

int PrimeField::chi_euler(uint64_t u) const {
    if (u == 0) return 0;
    return pow_mod(u, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

}  // namespace quadgraph
