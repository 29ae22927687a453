#include "reslab/expsums.hpp"

#include "reslab/symbol.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace reslab;
using std::complex;

namespace {

// Independent oracle: plain std::polar accumulation, no integer angle
// reduction, no compensation.
complex<double> naive_twisted_sum(u64 p, u64 s) {
    complex<double> sum = 0.0;
    for (u64 u = 0; u < p; ++u)
        sum += std::polar(1.0, 2.0 * std::numbers::pi * double(u) * double(u) * double(s) / double(p));
    return sum;
}

}  // namespace

TEST_CASE("gauss_sum closed-form examples") {
    CHECK(std::abs(gauss_sum(PrimeModulus(5)) - complex<double>(std::sqrt(5.0), 0)) < 1e-9);
    CHECK(std::abs(gauss_sum(PrimeModulus(3)) - complex<double>(0, std::sqrt(3.0))) < 1e-9);
    CHECK(std::abs(gauss_sum(PrimeModulus(7)) - complex<double>(0, std::sqrt(7.0))) < 1e-9);
    CHECK(std::abs(gauss_sum(PrimeModulus(7)) - naive_twisted_sum(7, 1)) < 1e-9);
}

TEST_CASE("gauss_sum modulus is sqrt(p) for p <= 1000") {
    for (u64 p : primes_in({3, 1000})) {
        const double sqrt_p = std::sqrt(double(p));
        CHECK(std::abs(std::abs(gauss_sum(PrimeModulus(p))) - sqrt_p) < 1e-6 * sqrt_p);
    }
}

TEST_CASE("twisted_gauss_sum examples") {
    PrimeModulus m5(5), m7(7);
    CHECK(std::abs(twisted_gauss_sum(m5, 1) - complex<double>(std::sqrt(5.0), 0)) < 1e-9);
    CHECK(std::abs(twisted_gauss_sum(m5, 2) - complex<double>(-std::sqrt(5.0), 0)) < 1e-9);
    // (3^{-1}|7) = (5|7) = -1, eta_7 = i
    CHECK(std::abs(twisted_gauss_sum(m7, 3) - complex<double>(0, -std::sqrt(7.0))) < 1e-9);
    CHECK(std::abs(twisted_gauss_sum(m7, 3) - naive_twisted_sum(7, 3)) < 1e-9);
    CHECK_THROWS_AS(twisted_gauss_sum(m7, 0), std::invalid_argument);
    CHECK_THROWS_AS(twisted_gauss_sum(m7, 14), std::invalid_argument);
}

TEST_CASE("twisted over plain equals the inverse symbol") {
    std::mt19937_64 rng(7);
    const auto pool = primes_in({3, 2000});
    for (int i = 0; i < 100; ++i) {
        PrimeModulus m(pool[rng() % pool.size()]);
        const u64 s = 1 + rng() % (m.p() - 1);
        const complex<double> ratio = twisted_gauss_sum(m, s) / gauss_sum(m);
        CHECK(std::abs(ratio - double(legendre(i64(m.inv(s)), m))) < 1e-6);
    }
}

TEST_CASE("fourier fixed point examples") {
    CHECK(fourier_fixed_point_residual(PrimeModulus(5), 1) < 1e-6);
    CHECK(fourier_fixed_point_residual(PrimeModulus(7), 3) < 1e-6);
    CHECK(fourier_fixed_point_residual(PrimeModulus(7), 0) < 1e-6);
}

TEST_CASE("fourier fixed point for all s, p <= 100") {
    for (u64 p : primes_in({3, 100})) {
        PrimeModulus m(p);
        for (u64 s = 0; s < p; ++s)
            CHECK(fourier_fixed_point_residual(m, s) < 1e-6);
    }
}

TEST_CASE("quad_poly_char_sum examples") {
    PrimeModulus m7(7), m11(11);
    CHECK(quad_poly_char_sum(m7, 1, 0, 1) == -1);
    CHECK(quad_poly_char_sum(m7, 1, 0, 0) == 6);       // discriminant 0
    CHECK(quad_poly_char_sum(m11, 2, 4, 2) == -10);    // disc 0, (2|11) = -1
    CHECK_THROWS_AS(quad_poly_char_sum(m7, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(quad_poly_char_sum(m7, 7, 1, 1), std::invalid_argument);
}

TEST_CASE("quad_poly_char_sum matches closed form exhaustively for p <= 50") {
    for (u64 p : primes_in({3, 50})) {
        PrimeModulus m(p);
        for (u64 a = 1; a < p; ++a) {
            const i64 chi_a = legendre(i64(a), m);
            for (u64 b = 0; b < p; ++b) {
                for (u64 c = 0; c < p; ++c) {
                    const u64 disc = (m.mul(b, b) + p - m.mul(4 % p, m.mul(a, c)) % p) % p;
                    const i64 expected = disc != 0 ? -chi_a : chi_a * i64(p - 1);
                    CHECK(quad_poly_char_sum(m, a, b, c) == expected);
                }
            }
        }
    }
}

TEST_CASE("quad_poly_char_sum matches closed form, randomized p <= 500") {
    std::mt19937_64 rng(11);
    const auto pool = primes_in({53, 500});
    for (int i = 0; i < 200; ++i) {
        PrimeModulus m(pool[rng() % pool.size()]);
        const u64 p = m.p();
        const u64 a = 1 + rng() % (p - 1);
        const u64 b = rng() % p;
        const u64 c = rng() % p;
        const u64 disc = (m.mul(b, b) + p - m.mul(4, m.mul(a, c))) % p;
        const i64 chi_a = legendre(i64(a), m);
        const i64 expected = disc != 0 ? -chi_a : chi_a * i64(p - 1);
        CHECK(quad_poly_char_sum(m, a, b, c) == expected);
    }
}

TEST_CASE("kahan summation keeps tiny terms") {
    KahanSum s;
    s.add(1.0);
    for (int i = 0; i < 1000000; ++i) s.add(1e-16);
    CHECK(s.value() == doctest::Approx(1.0 + 1e-10).epsilon(1e-12));
}
