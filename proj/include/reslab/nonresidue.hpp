#pragma once

#include "reslab/modcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reslab {

struct NonresidueRecord {
    u64 p;
    u64 n_p;       // least quadratic nonresidue (always prime)
    double scale;  // (ln p)(ln ln p)
    double c_p;    // n_p / scale, with scale rounded to 2 decimals first
};

/// Smallest n >= 2 with (n|p) = -1, scanning prime candidates only.
u64 least_nonresidue(const PrimeModulus& m);

/// Fast path for sweeps: p is assumed prime (no revalidation).
u64 least_nonresidue_unchecked(u64 p);

NonresidueRecord record_for(const PrimeModulus& m);

/// Least prime p <= search_bound with least_nonresidue(p) = p_n; nullopt if
/// the bound is exhausted.
std::optional<u64> smallest_prime_attaining(unsigned n, u64 search_bound);

struct TableRow {
    unsigned n;
    u64 p_n;
    std::optional<NonresidueRecord> record;  // nullopt when no p found below the bound
};

/// Rows 1..n_max of the least-nonresidue table, one sweep up to search_bound.
std::vector<TableRow> nonresidue_table(unsigned n_max, u64 search_bound, unsigned workers = 1);

struct DistributionReport {
    u64 x;
    u64 pi_x;                       // number of odd primes swept (p in [3, x])
    std::vector<u64> counts;        // counts[n-1] = #{p <= x : n_p = p_n}
    std::vector<double> frequencies;
    double mean;                    // (1/pi_x) * sum n_p, numerator exact
};

/// One-pass sweep over all odd primes p <= x; guard x <= 10^8.
DistributionReport distribution(u64 x, unsigned workers = 1);

struct BoundCheck {
    std::string name;
    double bound;
    bool satisfied;
};

/// The standard upper bounds evaluated numerically against n_p:
/// sqrt(p)+1, p^{1/(4 sqrt e)+0.01}, 2 (ln p)^2, and 20 (ln p)(ln ln p).
std::vector<BoundCheck> bound_synopsis(const PrimeModulus& m);

/// (ln p)(ln ln p), natural logs; positive for every odd prime p >= 3.
double nonresidue_scale(u64 p);

}  // namespace reslab
