#include "reslab/charsum.hpp"

#include "reslab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reslab {

PartialSumProfile partial_sum_profile(const PrimeModulus& m) {
    const u64 p = m.p();
    if (p > 10000000ull) throw std::out_of_range("partial_sum_profile: p capped at 10^7");

    PartialSumProfile prof;
    prof.p = p;
    prof.values.resize(p);
    prof.max_abs = 0;
    prof.longest_inc_run = 0;
    prof.longest_dec_run = 0;

    std::int32_t f = 0;
    unsigned inc = 0, dec = 0;
    for (u64 x = 0; x < p; ++x) {
        const int chi = x == 0 ? 0 : jacobi(static_cast<i64>(x), p);
        f += chi;
        prof.values[x] = f;
        prof.max_abs = std::max<i64>(prof.max_abs, std::abs(static_cast<i64>(f)));
        // A strictly monotone run is a stretch of equal nonzero steps.
        inc = chi == 1 ? inc + 1 : 0;
        dec = chi == -1 ? dec + 1 : 0;
        prof.longest_inc_run = std::max(prof.longest_inc_run, inc);
        prof.longest_dec_run = std::max(prof.longest_dec_run, dec);
    }
    return prof;
}

PvCheck pv_check(const PrimeModulus& m) {
    const PartialSumProfile prof = partial_sum_profile(m);
    const double p = static_cast<double>(m.p());
    PvCheck c;
    c.max_abs = prof.max_abs;
    c.bound = std::sqrt(p) * std::log(p);
    c.ratio = static_cast<double>(prof.max_abs) / c.bound;
    c.satisfied = static_cast<double>(prof.max_abs) <= c.bound;
    return c;
}

BurgessCheck burgess_check(u64 p, u64 m_start, u64 n_len, unsigned r) {
    if (p < 10000000ull)
        throw std::invalid_argument("burgess_check: the bound requires p >= 10^7");
    if (!is_prime(p)) throw std::invalid_argument("burgess_check: p must be prime");
    if (n_len < 1) throw std::invalid_argument("burgess_check: N >= 1");
    if (r < 1 || r > 6) throw std::invalid_argument("burgess_check: r must be in [1, 6]");

    i64 sum = 0;
    for (u64 n = m_start; n <= m_start + n_len; ++n) {
        const u64 v = n % p;
        if (v != 0) sum += jacobi(static_cast<i64>(v), p);
    }
    const double pd = static_cast<double>(p);
    const double rd = static_cast<double>(r);
    const double bound = 2.7 * std::pow(static_cast<double>(n_len), 1.0 - 1.0 / rd) *
                         std::pow(pd, (rd + 1.0) / (4.0 * rd * rd)) *
                         std::pow(std::log(pd), 1.0 / rd);
    BurgessCheck c;
    c.sum = sum;
    c.bound = bound;
    c.satisfied = static_cast<double>(std::abs(sum)) <= bound;
    return c;
}

u64 qr_sum(const PrimeModulus& m) {
    const u64 p = m.p();
    if (p % 4 != 1) throw std::invalid_argument("qr_sum: identity requires p = 1 mod 4");
    // v^2 for v in [1, (p-1)/2] hits each nonzero residue exactly once.
    u64 sum = 0;
    for (u64 v = 1; v <= m.half(); ++v) sum += m.mul(v, v);
    return sum;
}

LehmerSum lehmer_triple_sum(const PrimeModulus& m, u64 a, u64 b) {
    const u64 p = m.p();
    a %= p;
    b %= p;
    const auto is_square = [&](u64 v) {
        return v != 0 && pow_mod(v, m.half(), p) == 1;
    };
    LehmerSum out;
    out.degenerate = a == b || !is_square(a) || !is_square(b);
    const std::vector<std::int8_t> chi = symbol_table(m);
    i64 sum = 0;
    for (u64 n = 0; n < p; ++n) {
        u64 na = n + a;
        if (na >= p) na -= p;
        u64 nb = n + b;
        if (nb >= p) nb -= p;
        sum += i64(chi[na]) * chi[n] * chi[nb];
    }
    out.value = sum;
    return out;
}

}  // namespace reslab
