#include "reslab/symbol.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace reslab {

int jacobi(i64 a, u64 n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
    u64 aa = static_cast<u64>(((a % static_cast<i64>(n)) + static_cast<i64>(n))) % n;
    int result = 1;
    while (aa != 0) {
        while ((aa & 1) == 0) {
            aa >>= 1;
            const u64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(aa, n);
        if (aa % 4 == 3 && n % 4 == 3) result = -result;
        aa %= n;
    }
    return n == 1 ? result : 0;
}

int legendre(i64 u, const PrimeModulus& m) {
    return jacobi(u, m.p());
}

int euler_criterion(i64 u, const PrimeModulus& m) {
    const u64 t = pow_mod(m.reduce(u), m.half(), m.p());
    if (t == 0) return 0;
    if (t == 1) return 1;
    if (t == m.p() - 1) return -1;
    throw std::logic_error("euler_criterion: power outside {0,1,p-1}; modulus not prime");
}

int char_qr(u64 u, const PrimeModulus& m) {
    if (u % m.p() == 0) throw std::invalid_argument("char_qr: u must be nonzero mod p");
    return (1 + legendre(static_cast<i64>(u % m.p()), m)) / 2;
}

int char_qnr(u64 u, const PrimeModulus& m) {
    if (u % m.p() == 0) throw std::invalid_argument("char_qnr: u must be nonzero mod p");
    return (1 - legendre(static_cast<i64>(u % m.p()), m)) / 2;
}

int char_qr_expsum(u64 u, const PrimeModulus& m) {
    const u64 p = m.p();
    if (p > 1000) throw std::out_of_range("char_qr_expsum: p capped at 1000 (Theta(p^2) cost)");
    u %= p;
    if (u == 0) throw std::invalid_argument("char_qr_expsum: u must be nonzero mod p");

    std::vector<std::complex<double>> root(p);
    for (u64 j = 0; j < p; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
        root[j] = {std::cos(angle), std::sin(angle)};
    }

    const u64 tau = m.tau();
    const u64 tau_sq = m.mul(tau, tau);
    std::complex<double> total = 0.0;
    u64 tau_2n = 1;  // tau^{2n}, n = 0
    for (u64 n = 0; n < m.half(); ++n) {
        const u64 d = (tau_2n + p - u) % p;
        std::complex<double> inner = 0.0;
        u64 idx = 0;
        for (u64 mm = 0; mm < p; ++mm) {
            inner += root[idx];
            idx += d;
            if (idx >= p) idx -= p;
        }
        total += inner;
        tau_2n = m.mul(tau_2n, tau_sq);
    }
    total /= static_cast<double>(p);

    const double re = total.real();
    const long rounded = std::lround(re);
    if (std::abs(total.imag()) >= 1e-6 || std::abs(re - static_cast<double>(rounded)) >= 1e-6)
        throw std::logic_error("char_qr_expsum: sum drifted from {0,1}");
    if (rounded != 0 && rounded != 1)
        throw std::logic_error("char_qr_expsum: sum outside {0,1}");
    return static_cast<int>(rounded);
}

std::vector<std::int8_t> symbol_table(const PrimeModulus& m) {
    const u64 p = m.p();
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (u64 v = 1; v <= m.half(); ++v) chi[m.mul(v, v)] = 1;
    return chi;
}

}  // namespace reslab
