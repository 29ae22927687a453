#pragma once

#include "reslab/modcore.hpp"

#include <cstdint>
#include <vector>

namespace reslab {

/// Prefix sums f(x) = sum_{0 <= n <= x} chi(n) of the quadratic character,
/// with chi(0) = 0, plus run statistics. f(p-1) = 0 always.
struct PartialSumProfile {
    u64 p;
    std::vector<std::int32_t> values;  // f(0) .. f(p-1)
    i64 max_abs;
    unsigned longest_inc_run;  // longest strictly increasing stretch, = longest residue run
    unsigned longest_dec_run;
};

/// Single O(p) pass; guard p <= 10^7.
PartialSumProfile partial_sum_profile(const PrimeModulus& m);

struct PvCheck {
    i64 max_abs;
    double bound;  // sqrt(p) ln p, implied constant 1
    double ratio;
    bool satisfied;
};

PvCheck pv_check(const PrimeModulus& m);

struct BurgessCheck {
    i64 sum;
    double bound;  // 2.7 N^{1-1/r} p^{(r+1)/(4 r^2)} (ln p)^{1/r}
    bool satisfied;
};

/// |sum_{M <= n <= M+N} chi(n)| against the explicit bound.
/// Requires prime p >= 10^7 (the bound's stated domain) and r in [1, 6].
BurgessCheck burgess_check(u64 p, u64 m_start, u64 n_len, unsigned r);

/// Sum of the (p-1)/2 nonzero quadratic residues; equals p(p-1)/4.
/// Requires p = 1 mod 4.
u64 qr_sum(const PrimeModulus& m);

struct LehmerSum {
    i64 value;
    bool degenerate;  // inputs were not distinct nonzero squares
};

/// sum_{0 <= n < p} ((n+a)|p) (n|p) ((n+b)|p), chi(0) = 0 convention.
LehmerSum lehmer_triple_sum(const PrimeModulus& m, u64 a, u64 b);

}  // namespace reslab
