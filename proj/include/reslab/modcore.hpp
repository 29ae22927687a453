#pragma once

#include <atomic>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace reslab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest supported modulus; products of two residues below this fit in 128 bits.
inline constexpr u64 kModulusCap = u64{1} << 62;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for all n < 2^62.
/// Throws std::out_of_range above the cap.
bool is_prime(u64 n);

/// A validated odd prime with its cached structure.
class PrimeModulus {
public:
    explicit PrimeModulus(u64 p);

    u64 p() const { return p_; }
    u64 half() const { return half_; }  // (p-1)/2

    /// Least primitive root mod p, computed on first use and cached.
    u64 tau() const;

    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
    u64 pow(u64 b, u64 e) const { return pow_mod(b % p_, e, p_); }
    u64 inv(u64 a) const;  // throws std::invalid_argument for a = 0 mod p
    u64 reduce(i64 a) const;

private:
    u64 p_;
    u64 half_;
    mutable std::atomic<u64> tau_{0};
};

struct PrimeRange {
    u64 lo;
    u64 hi;  // inclusive
};

/// Segmented sieve over [lo, hi]; visit returns false to stop early.
/// Throws std::out_of_range for hi >= 2^62.
void for_each_prime_until(PrimeRange range, const std::function<bool(u64)>& visit);
void for_each_prime(PrimeRange range, const std::function<void(u64)>& visit);
std::vector<u64> primes_in(PrimeRange range);

/// Ascending distinct prime factors of n >= 1, by trial division.
std::vector<u64> distinct_prime_factors(u64 n);

/// Least primitive root of p; verified against the factorization of p-1.
u64 primitive_root(const PrimeModulus& m);

/// Modular square roots via Tonelli-Shanks.
/// Returns {r, p-r} with r < p-r for a nonzero residue, {0, 0} for u = 0,
/// nullopt for a nonresidue.
std::optional<std::array<u64, 2>> sqrt_mod(u64 u, const PrimeModulus& m);

/// The n-th prime, n >= 1 (p_1 = 2).
u64 nth_prime(unsigned n);

/// Index n with p_n == q for prime q, or 0 if q is not in the cached list.
unsigned prime_index(u64 q);

}  // namespace reslab
