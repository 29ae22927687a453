#include "reslab/modcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reslab {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n >= kModulusCap)
        throw std::out_of_range("is_prime: n above 2^62 cap");
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p), half_((p - 1) / 2) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("PrimeModulus: p must be an odd prime in [3, 2^62)");
}

u64 PrimeModulus::tau() const {
    u64 cached = tau_.load(std::memory_order_relaxed);
    if (cached != 0) return cached;
    u64 g = primitive_root(*this);
    tau_.store(g, std::memory_order_relaxed);
    return g;
}

u64 PrimeModulus::inv(u64 a) const {
    a %= p_;
    if (a == 0) throw std::invalid_argument("mod_inv: zero has no inverse");
    return pow_mod(a, p_ - 2, p_);
}

u64 PrimeModulus::reduce(i64 a) const {
    i64 r = a % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    return static_cast<u64>(r);
}

namespace {

std::vector<u64> simple_sieve(u64 limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return primes;
}

}  // namespace

void for_each_prime_until(PrimeRange range, const std::function<bool(u64)>& visit) {
    if (range.hi >= kModulusCap)
        throw std::out_of_range("for_each_prime: hi above 2^62 cap");
    if (range.lo > range.hi) return;
    const u64 lo = std::max<u64>(range.lo, 2);
    if (lo > range.hi) return;

    const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(range.hi))) + 2;
    const std::vector<u64> base = simple_sieve(root);

    constexpr u64 kSegment = u64{1} << 20;
    std::vector<bool> comp;
    for (u64 low = lo; low <= range.hi;) {
        const u64 high = std::min(low + kSegment - 1, range.hi);
        comp.assign(high - low + 1, false);
        for (u64 q : base) {
            if (q * q > high) break;
            u64 start = std::max(q * q, ((low + q - 1) / q) * q);
            for (u64 j = start; j <= high; j += q) comp[j - low] = true;
        }
        for (u64 n = low; n <= high; ++n) {
            if (!comp[n - low]) {
                if (!visit(n)) return;
            }
        }
        if (high == range.hi) break;
        low = high + 1;
    }
}

void for_each_prime(PrimeRange range, const std::function<void(u64)>& visit) {
    for_each_prime_until(range, [&](u64 p) {
        visit(p);
        return true;
    });
}

std::vector<u64> primes_in(PrimeRange range) {
    std::vector<u64> out;
    for_each_prime(range, [&](u64 p) { out.push_back(p); });
    return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> factors;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

u64 primitive_root(const PrimeModulus& m) {
    const u64 p = m.p();
    if (p == 3) return 2;
    const std::vector<u64> factors = distinct_prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: no generator found (modulus not prime?)");
}

std::optional<std::array<u64, 2>> sqrt_mod(u64 u, const PrimeModulus& m) {
    const u64 p = m.p();
    u %= p;
    if (u == 0) return std::array<u64, 2>{0, 0};
    if (pow_mod(u, m.half(), p) != 1) return std::nullopt;

    u64 r;
    if (p % 4 == 3) {
        r = pow_mod(u, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. The nonresidue scan is deterministic (least z).
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (pow_mod(z, m.half(), p) != p - 1) ++z;
        u64 c = pow_mod(z, q, p);
        u64 t = pow_mod(u, q, p);
        r = pow_mod(u, (q + 1) / 2, p);
        int e = s;
        while (t != 1) {
            u64 t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < e - i - 1; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            e = i;
        }
    }
    u64 lo = std::min(r, p - r);
    return std::array<u64, 2>{lo, p - lo};
}

namespace {

const std::vector<u64>& small_prime_list() {
    // Covers every least-nonresidue candidate up to the 10^8 sweep guard
    // (n_p <= sqrt(p) + 1 < 10^4 there).
    static const std::vector<u64> primes = simple_sieve(1 << 16);
    return primes;
}

}  // namespace

u64 nth_prime(unsigned n) {
    if (n == 0) throw std::invalid_argument("nth_prime: index starts at 1");
    const auto& primes = small_prime_list();
    if (n > primes.size()) throw std::out_of_range("nth_prime: index beyond cached list");
    return primes[n - 1];
}

unsigned prime_index(u64 q) {
    const auto& primes = small_prime_list();
    auto it = std::lower_bound(primes.begin(), primes.end(), q);
    if (it == primes.end() || *it != q) return 0;
    return static_cast<unsigned>(it - primes.begin()) + 1;
}

}  // namespace reslab
