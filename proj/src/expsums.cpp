#include "reslab/expsums.hpp"

#include "reslab/symbol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reslab {

namespace {

// Angle for residue r in [0, p): 2 pi r / p. The residue is reduced exactly
// in integers before any floating conversion.
inline double angle_of(u64 r, u64 p) {
    return 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(p));
}

}  // namespace

std::complex<double> eta_constant(const PrimeModulus& m) {
    return m.p() % 4 == 1 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 1.0};
}

std::complex<double> gauss_sum(const PrimeModulus& m) {
    return twisted_gauss_sum(m, 1);
}

std::complex<double> twisted_gauss_sum(const PrimeModulus& m, u64 s) {
    const u64 p = m.p();
    if (p > 1000000) throw std::out_of_range("twisted_gauss_sum: p capped at 10^6");
    s %= p;
    if (s == 0) throw std::invalid_argument("twisted_gauss_sum: s must be nonzero mod p");
    KahanSum re, im;
    for (u64 u = 0; u < p; ++u) {
        const u64 r = m.mul(m.mul(u, u), s);
        const double a = angle_of(r, p);
        re.add(std::cos(a));
        im.add(std::sin(a));
    }
    return {re.value(), im.value()};
}

double fourier_fixed_point_residual(const PrimeModulus& m, u64 s) {
    const u64 p = m.p();
    if (p > 10000) throw std::out_of_range("fourier_fixed_point_residual: p capped at 10^4");
    s %= p;
    const std::vector<std::int8_t> chi = symbol_table(m);
    KahanSum re, im;
    u64 r = 0;  // s*t mod p, incremental
    for (u64 t = 0; t < p; ++t) {
        if (chi[t] != 0) {
            const double a = angle_of(r, p);
            re.add(chi[t] * std::cos(a));
            im.add(chi[t] * std::sin(a));
        }
        r += s;
        if (r >= p) r -= p;
    }
    const std::complex<double> sum{re.value(), im.value()};
    const std::complex<double> transformed = sum / (eta_constant(m) * std::sqrt(static_cast<double>(p)));
    const double symbol = static_cast<double>(chi[s]);
    return std::abs(symbol - transformed);
}

i64 quad_poly_char_sum(const PrimeModulus& m, u64 a, u64 b, u64 c) {
    const u64 p = m.p();
    a %= p;
    b %= p;
    c %= p;
    if (a == 0) throw std::invalid_argument("quad_poly_char_sum: a must be nonzero mod p");
    const std::vector<std::int8_t> chi = symbol_table(m);
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        const u64 v = (m.mul(m.mul(x, x), a) + m.mul(b, x) + c) % p;
        sum += chi[v];
    }
    return sum;
}

}  // namespace reslab
