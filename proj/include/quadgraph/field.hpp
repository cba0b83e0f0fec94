#pragma once

#include <cstdint>

#include "quadgraph/bitrow.hpp"

namespace quadgraph {

// Widened multiply-then-reduce; safe for moduli below 2^63.
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(uint64_t n);

// An odd prime p with its quadratic residue set.  The indicator table of
// Q_p = {u^2 : u in F_p} is materialized for p <= kTableLimit; above that
// the quadratic character falls back to the Euler criterion.  Immutable
// after construction and safe to share across threads.
class PrimeField {
public:
    // Largest p for which the residue bit table is built (8 MiB at the limit).
    static constexpr uint64_t kTableLimit = uint64_t{1} << 26;
    static constexpr uint64_t kMaxPrime = uint64_t{1} << 61;

    // Throws std::invalid_argument unless p is an odd prime in [3, 2^61).
    explicit PrimeField(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t lambda() const { return lambda_; }   // smallest non-square in F_p*
    bool has_table() const { return squares_.size() != 0; }
    const BitRow& squares() const { return squares_; }

    bool is_square(uint64_t u) const {            // membership in Q_p (0 included)
        return has_table() ? squares_.test(u) : u == 0 || chi_euler(u) == 1;
    }

    // Quadratic character: +1 on nonzero squares, 0 at 0, -1 otherwise.
    int chi(uint64_t u) const {
        if (u == 0) return 0;
        if (has_table()) return squares_.test(u) ? 1 : -1;
        return chi_euler(u);
    }

    int chi_table(uint64_t u) const;   // requires has_table()
    int chi_euler(uint64_t u) const;   // u^((p-1)/2), any p

    uint64_t add(uint64_t a, uint64_t b) const { return add_mod(a, b, p_); }
    uint64_t sub(uint64_t a, uint64_t b) const { return sub_mod(a, b, p_); }
    uint64_t mul(uint64_t a, uint64_t b) const { return mul_mod(a, b, p_); }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }

private:
    uint64_t p_ = 0;
    uint64_t lambda_ = 0;
    BitRow squares_;
};

}  // namespace quadgraph
