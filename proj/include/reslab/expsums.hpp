#pragma once

#include "reslab/modcore.hpp"

#include <complex>

namespace reslab {

/// Compensated (Kahan) accumulator; keeps absolute error far below the
/// 1e-6 * sqrt(p) tolerances even at 10^6-term sums.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// The unit eta_p: 1 if p = 1 mod 4, i if p = 3 mod 4.
std::complex<double> eta_constant(const PrimeModulus& m);

/// Direct evaluation of sum_u e^{2 pi i u^2 / p}; equals eta_p * sqrt(p).
/// Guard p <= 10^6.
std::complex<double> gauss_sum(const PrimeModulus& m);

/// sum_u e^{2 pi i u^2 s / p} = (s^{-1}|p) eta_p sqrt(p), s != 0.
std::complex<double> twisted_gauss_sum(const PrimeModulus& m, u64 s);

/// |(s|p) - (1/(eta_p sqrt(p))) sum_t (t|p) e^{2 pi i s t / p}|; below 1e-6
/// for every s when the symbol is the Fourier fixed point. Guard p <= 10^4.
double fourier_fixed_point_residual(const PrimeModulus& m, u64 s);

/// Exact integer sum_x ((a x^2 + b x + c)|p), a != 0 mod p.
/// Closed form: -(a|p) for nonzero discriminant, (a|p)(p-1) otherwise.
i64 quad_poly_char_sum(const PrimeModulus& m, u64 a, u64 b, u64 c);

}  // namespace reslab
