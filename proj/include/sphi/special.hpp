#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphi/constants.hpp"
#include "sphi/summation.hpp"

namespace sphi {

// digamma(x) for x > 0: shift upward until x >= 12, then the asymptotic
// series ln x - 1/(2x) - sum B_2k/(2k x^2k) with 7 Bernoulli terms.
inline double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("digamma: argument must be positive and finite");
    double shift = 0.0;
    while (x < 12.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    const auto& B = bernoulli();
    double series = 0.0;
    double p = inv2;
    for (int k = 1; k <= 7; ++k) {
        series += B(k) / (2.0 * k) * p;
        p *= inv2;
    }
    return shift + std::log(x) - 0.5 / x - series;
}

// One summand of the S series: ln(n/a) - a/(2n) - digamma(n/a).
// For n/a >= 16 the naive difference cancels catastrophically, so the
// Bernoulli form sum B_2k (a/n)^{2k} / (2k) is used directly.
inline double digamma_error_term(double a, long n) {
    if (!(a > 0.0))
        throw std::domain_error("digamma_error_term: a must be positive");
    if (n < 1)
        throw std::domain_error("digamma_error_term: n must be >= 1");
    const double x = static_cast<double>(n) / a;
    if (x >= 16.0) {
        const double r = 1.0 / (x * x);
        const auto& B = bernoulli();
        double sum = 0.0;
        double p = r;
        for (int k = 1; k <= BernoulliTable::size; ++k) {
            const double term = B(k) / (2.0 * k) * p;
            sum += term;
            if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
            p *= r;
        }
        return sum;
    }
    return std::log(x) - 0.5 / x - digamma(x);
}

// sum_{k=1}^{n-1} (n/2 - k) cot(m k pi / n) for coprime n, m.
inline double cot_sum(long n, long m) {
    if (n < 1 || m < 1)
        throw std::domain_error("cot_sum: n, m must be positive");
    if (std::gcd(n, m) != 1)
        throw std::domain_error("cot_sum: n and m must be coprime");
    CompensatedSum<double> acc;
    for (long k = 1; k < n; ++k) {
        long r = (m % n) * k % n;  // cot has period pi
        double sign = 1.0;
        if (2 * r > n) {  // keep the argument in (0, pi/2]
            r = n - r;
            sign = -1.0;
        }
        const double cot = sign / std::tan(kPi * static_cast<double>(r) /
                                           static_cast<double>(n));
        acc.add((0.5 * static_cast<double>(n) - static_cast<double>(k)) * cot);
    }
    return acc.value();
}

// tau(n), the number of divisors, by trial division.
inline long divisor_count(long n) {
    if (n < 1) throw std::domain_error("divisor_count: n must be >= 1");
    long count = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

namespace detail {

// Exponential integral E1(z) for complex z off the negative real axis.
// Power series for |z| <= 4, modified-Lentz continued fraction beyond.
inline std::complex<double> expint_e1(std::complex<double> z) {
    using C = std::complex<double>;
    const double az = std::abs(z);
    if (az == 0.0) throw std::domain_error("expint_e1: z = 0");
    if (az <= 4.0) {
        C sum = 0.0;
        C term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -z / static_cast<double>(k);
            const C add = -term / static_cast<double>(k);
            sum += add;
            if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-30)) break;
        }
        return -kEulerGamma - std::log(z) + sum;
    }
    // E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/( ... ))))
    const double tiny = 1e-290;
    C b = z + 1.0;
    C c = 1.0 / tiny;
    C d = 1.0 / b;
    C h = d;
    for (int i = 1; i <= 300; ++i) {
        const C a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const C delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-z);
}

} // namespace detail

// integral_0^inf cos(t)/(t + beta) dt via the auxiliary representation
// g(beta) = Re[ e^{-i beta} E1(-i beta) ].
inline double cos_tail_integral(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("cos_tail_integral: beta must be positive");
    const std::complex<double> z(0.0, -beta);
    const std::complex<double> v = std::exp(z) * detail::expint_e1(z);
    return v.real();
}

// Gamma(z) by the Lanczos approximation (g = 7, 9 coefficients) with
// reflection for Re z < 0.5.
inline std::complex<double> complex_gamma(std::complex<double> z) {
    using C = std::complex<double>;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("complex_gamma: pole at nonpositive integer");
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    C x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    const C t = z + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Riemann zeta on Re z > 0 (z != 1) by Borwein's accelerated alternating
// series.  The truncation order grows with |Im z| to keep the relative
// error at ~1e-13 up to |Im z| = 50.
inline std::complex<double> zeta_strip(std::complex<double> z) {
    using C = std::complex<double>;
    if (!(z.real() > 0.0))
        throw std::domain_error("zeta_strip: requires Re z > 0");
    if (std::abs(z - C(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta_strip: pole at z = 1");

    const double t = std::fabs(z.imag());
    int n = static_cast<int>((32.0 + 1.5708 * t) / 1.7627) + 12;
    if (n < 24) n = 24;
    if (n > 220) n = 220;

    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    std::vector<double> d(static_cast<size_t>(n) + 1);
    double s = 1.0;
    double run = 1.0;
    d[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        s *= 4.0 * (n + i - 1) * (n - i + 1) /
             (static_cast<double>(2 * i) * (2 * i - 1));
        run += s;
        d[static_cast<size_t>(i)] = run;
    }
    const double dn = d[static_cast<size_t>(n)];

    CompensatedSum<C> acc;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        const C pw = std::exp(-z * std::log(static_cast<double>(k + 1)));
        acc.add(sign * (d[static_cast<size_t>(k)] - dn) * pw);
        sign = -sign;
    }
    const C denom = 1.0 - std::exp((1.0 - z) * std::log(2.0));
    return -acc.value() / (dn * denom);
}

} // namespace sphi
