#pragma once

#include "reslab/modcore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace reslab {

using Rational = boost::multiprecision::cpp_rational;

/// A vector of target symbol signs at strictly increasing offsets.
struct SymbolPattern {
    std::vector<u64> offsets;  // a_0 < a_1 < ... < a_{k-1}
    std::vector<int> signs;    // each +1 or -1

    SymbolPattern(std::vector<u64> offs, std::vector<int> sgns);

    /// Consecutive offsets 0..k-1 with signs taken from bits:
    /// bit (k-1-i) of `bits` set means sign +1 at offset i (MSB = a_0).
    static SymbolPattern consecutive(unsigned k, u64 bits);

    unsigned k() const { return static_cast<unsigned>(signs.size()); }
    u64 sign_bits() const;         // pattern-as-binary, +1 -> 1, MSB = a_0
    std::string to_string() const; // "+-+" style
};

inline constexpr unsigned kMaxPatternLength = 24;

double peralta_bound(unsigned k, u64 p);

/// Exact census: #{u in [0,p) : every (u+a_i) mod p is nonzero and has
/// symbol signs[i]}. Guards: k <= 24, p < 2^31.
i64 count_pattern_exact(const PrimeModulus& m, const SymbolPattern& pat);

/// T(k,p) = (p-1)^{k+1} / (2^k p^k), exact.
Rational t_term(unsigned k, const PrimeModulus& m);

/// Second form p/2^k of the T-term, as a float.
double t_term_second_form(unsigned k, const PrimeModulus& m);

/// Exact residual N(k,p) - T(k,p), as a float (T subtracted exactly first).
double u_residual(const PrimeModulus& m, const SymbolPattern& pat);

/// Closed-form count of pairs n, n+a with signs (e0, e1):
/// (p - 2 - e0 (a|p) - e1 (-a|p) - e0 e1) / 4. Exact.
i64 twin_count_formula(const PrimeModulus& m, u64 a, int e0, int e1);

/// Census restricted to u in {start, ..., start+length-1} mod p.
i64 count_pattern_in_interval(const PrimeModulus& m, u64 start, u64 length,
                              const SymbolPattern& pat);

struct CensusReport {
    u64 p;
    unsigned k;
    u64 pattern_bits;
    i64 exact_count;
    Rational t;             // exact T(k,p)
    double first_order;     // (p/2^k)(1-1/p)^k
    double second_order;    // p/2^k
    double residual;        // exact_count - T(k,p)
    double peralta;

    std::string pattern_string() const;
};

/// All-pattern sweep with consecutive offsets: for each prime in range and
/// each k <= k_max, one report per sign pattern, ordered by (p, k, bits).
/// Guard k_max <= 12.
std::vector<CensusReport> census_sweep(PrimeRange range, unsigned k_max);

/// Reports for a single prime (same ordering); used by census_sweep.
std::vector<CensusReport> census_for_prime(const PrimeModulus& m, unsigned k_max);

}  // namespace reslab
