#pragma once

// Independent brute-force oracles used by the tests. These deliberately avoid
// the library's fast paths: trial division instead of Miller-Rabin, square
// enumeration instead of reciprocity.

#include "reslab/modcore.hpp"

#include <set>
#include <vector>

namespace oracle {

using reslab::u64;
using reslab::i64;

inline bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The set of nonzero squares mod p, by enumeration.
inline std::set<u64> squares_mod(u64 p) {
    std::set<u64> sq;
    for (u64 v = 1; v < p; ++v) sq.insert(v * v % p);
    return sq;
}

/// Symbol via square enumeration: +1, -1, or 0.
inline int symbol_by_enumeration(u64 u, u64 p, const std::set<u64>& squares) {
    u %= p;
    if (u == 0) return 0;
    return squares.count(u) ? 1 : -1;
}

inline std::vector<int> symbol_row(u64 p) {
    const std::set<u64> sq = squares_mod(p);
    std::vector<int> chi(p);
    for (u64 u = 0; u < p; ++u) chi[u] = symbol_by_enumeration(u, p, sq);
    return chi;
}

}  // namespace oracle
