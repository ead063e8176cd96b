#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

// Bessel functions J0, J1, Y0, Y1 in double precision.
// Ascending power series up to x = 12, Hankel asymptotic expansion beyond.
// Target accuracy 1e-10 over the range used by the annulus spectra
// (x up to a few hundred); the Wronskian defect serves as a runtime
// accuracy sentinel.

namespace spot {

namespace detail {

constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSeriesCutoff = 12.0;

inline double j0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 80; ++m) {
        term *= -q / (static_cast<double>(m) * m);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

inline double j1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 80; ++m) {
        term *= -q / (static_cast<double>(m) * (m + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return 0.5 * x * sum;
}

inline double y0_series(double x) {
    const double q = 0.25 * x * x;
    // sum_{m>=1} (-1)^{m+1} H_m q^m / (m!)^2
    double fact_term = 1.0;  // q^m/(m!)^2, built incrementally
    double harmonic = 0.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int m = 1; m < 80; ++m) {
        fact_term *= q / (static_cast<double>(m) * m);
        harmonic += 1.0 / m;
        const double term = sign * harmonic * fact_term;
        sum += term;
        sign = -sign;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0_series(x) + sum);
}

inline double y1_series(double x) {
    const double q = 0.25 * x * x;
    // sum_{m>=0} (-1)^m (H_m + H_{m+1}) q^m / (m!(m+1)!)
    double fact_term = 1.0;  // q^m/(m!(m+1)!)
    double hm = 0.0, hm1 = 1.0;
    double sum = hm + hm1;  // m = 0 term
    double sign = -1.0;
    for (int m = 1; m < 80; ++m) {
        fact_term *= q / (static_cast<double>(m) * (m + 1));
        hm += 1.0 / m;
        hm1 += 1.0 / (m + 1);
        const double term = sign * (hm + hm1) * fact_term;
        sum += term;
        sign = -sign;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return (2.0 / kPi) * (std::log(0.5 * x) + kEulerGamma) * j1_series(x)
           - 2.0 / (kPi * x) - (x / (2.0 * kPi)) * sum;
}

// Hankel modulus/phase sums P_nu, Q_nu with mu = 4 nu^2; the expansion is
// asymptotic, so accumulate until terms stop decreasing.
inline void hankel_pq(double mu, double x, double& p, double& q) {
    const double ix8 = 1.0 / (8.0 * x);
    p = 1.0;
    q = (mu - 1.0) * ix8;
    double num = mu - 1.0;   // running product of (mu - (2j-1)^2)
    double fact = 1.0;       // k!
    double pow8 = ix8;       // (8x)^{-k}
    double prev = std::numeric_limits<double>::max();
    double sp = -1.0, sq = -1.0;  // sign of the next P / Q term
    int j = 1;               // last odd index used in the product
    for (int k = 2; k < 40; ++k) {
        j += 2;
        num *= mu - static_cast<double>(j) * j;
        fact *= k;
        pow8 *= ix8;
        const double term = num / fact * pow8;
        if (std::abs(term) > prev) break;  // asymptotic tail started growing
        prev = std::abs(term);
        if (k % 2 == 0) {
            p += sp * term;
            sp = -sp;
        } else {
            q += sq * term;
            sq = -sq;
        }
        if (std::abs(term) < 1e-18) break;
    }
}

inline double j_asymptotic(int order, double x) {
    double p, q;
    hankel_pq(4.0 * order * order, x, p, q);
    const double chi = x - (2 * order + 1) * 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

inline double y_asymptotic(int order, double x) {
    double p, q;
    hankel_pq(4.0 * order * order, x, p, q);
    const double chi = x - (2 * order + 1) * 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

}  // namespace detail

inline double bessel_j0(double x) {
    x = std::abs(x);
    return x <= detail::kSeriesCutoff ? detail::j0_series(x)
                                      : detail::j_asymptotic(0, x);
}

inline double bessel_j1(double x) {
    const double ax = std::abs(x);
    const double v = ax <= detail::kSeriesCutoff ? detail::j1_series(ax)
                                                 : detail::j_asymptotic(1, ax);
    return x < 0 ? -v : v;
}

inline double bessel_y0(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_y0: requires x > 0");
    return x <= detail::kSeriesCutoff ? detail::y0_series(x)
                                      : detail::y_asymptotic(0, x);
}

inline double bessel_y1(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_y1: requires x > 0");
    return x <= detail::kSeriesCutoff ? detail::y1_series(x)
                                      : detail::y_asymptotic(1, x);
}

inline double bessel_j(int order, double x) {
    if (order == 0) return bessel_j0(x);
    if (order == 1) return bessel_j1(x);
    throw std::domain_error("bessel_j: only orders 0 and 1 supported");
}

inline double bessel_y(int order, double x) {
    if (order == 0) return bessel_y0(x);
    if (order == 1) return bessel_y1(x);
    throw std::domain_error("bessel_y: only orders 0 and 1 supported");
}

// J1(x)Y0(x) - J0(x)Y1(x) - 2/(pi x); zero in exact arithmetic.
inline double wronskian_defect(double x) {
    return bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x)
           - 2.0 / (detail::kPi * x);
}

}  // namespace spot
