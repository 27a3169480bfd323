#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sphi/constants.hpp"
#include "sphi/quadrature.hpp"
#include "sphi/special.hpp"
#include "sphi/summation.hpp"

namespace sphi {

enum class Route {
    Auto,
    Series,        // term-by-term sum of the defining series
    IntegralA,     // integral form with e^{-x}/x^2 subtraction terms
    IntegralB,     // compact integral form
    Rational,      // closed form for rational arguments
    Divisor,       // divisor-function / cosine-integral expansion
    FunctionalMap, // reduction through the functional equation
};

inline const char* route_name(Route r) {
    switch (r) {
        case Route::Series: return "Series";
        case Route::IntegralA: return "IntegralA";
        case Route::IntegralB: return "IntegralB";
        case Route::Rational: return "Rational";
        case Route::Divisor: return "Divisor";
        case Route::FunctionalMap: return "FunctionalMap";
        default: return "Auto";
    }
}

struct EvalResult {
    double value = 0.0;
    double abs_err = 0.0;
    Route route = Route::Auto;
    long work = 0;
};

// Coprime positive pair n/m, normalized on construction.
struct Rational {
    long n;
    long m;
    Rational(long n_, long m_) : n(n_), m(m_) {
        if (n < 1 || m < 1)
            throw std::domain_error("Rational: n, m must be positive");
        const long g = std::gcd(n, m);
        n /= g;
        m /= g;
    }
    double as_double() const {
        return static_cast<double>(n) / static_cast<double>(m);
    }
};

namespace detail {

// sum_{n > N} n^{-s} by Euler-Maclaurin (s >= 2, N >= 16).
inline double zeta_tail(double s, double N) {
    const double Ns = std::pow(N, -s);
    double t = N * Ns / (s - 1.0) - 0.5 * Ns;
    t += s * Ns / (12.0 * N);
    t -= s * (s + 1.0) * (s + 2.0) * Ns / (720.0 * N * N * N);
    t += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * Ns /
         (30240.0 * N * N * N * N * N);
    return t;
}

} // namespace detail

// S(a) as the direct series with an analytic Bernoulli tail.
inline EvalResult s_series(double a, double tol = 1e-12) {
    if (a < 0.0) throw std::domain_error("s_series: a must be >= 0");
    if (a == 0.0) return {0.0, 0.0, Route::Series, 0};
    if (tol < 1e-13) tol = 1e-13;

    const long cap = 10'000'000;
    long N = std::max<long>(32, static_cast<long>(std::ceil(32.0 * std::max(a, 1.0))));
    const auto& B = bernoulli();

    for (;; N *= 2) {
        if (N > cap)
            throw std::runtime_error("s_series: series cap exceeded");
        CompensatedSum<double> acc;
        for (long n = 1; n <= N; ++n) acc.add(digamma_error_term(a, n));

        // tail: sum_k B_2k a^{2k}/(2k) * sum_{n>N} n^{-2k}
        const double Nd = static_cast<double>(N);
        double tail = 0.0;
        double last = 0.0;
        bool converged = false;
        double a2k = a * a;
        for (int k = 1; k <= BernoulliTable::size; ++k) {
            last = B(k) / (2.0 * k) * a2k * detail::zeta_tail(2.0 * k, Nd);
            tail += last;
            a2k *= a * a;
            if (std::fabs(last) < 0.25 * tol) {
                converged = true;
                break;
            }
        }
        if (!converged) continue;

        EvalResult out;
        out.value = acc.value() + tail;
        out.abs_err = std::fabs(last) + 1e-14 * a * a + 2e-16 * std::fabs(out.value);
        out.route = Route::Series;
        out.work = N;
        return out;
    }
}

namespace detail {

// Small-x expansion of the integrand bracket of the subtraction-form
// integral.  The 1/x^2 and 1/x pieces cancel analytically; the remaining
// power series is produced by convolving and inverting the (e^x-1)/x
// coefficient series.
struct IntegralABracket {
    double a;
    double x0;
    static constexpr int M = 18;
    std::vector<double> poly;  // bracket(x) = sum poly[j] x^j for x < x0

    explicit IntegralABracket(double a_) : a(a_) {
        x0 = std::min(0.5, 1.5 / std::max(a, 1.0));
        std::vector<double> inv_fact(M + 2, 1.0);
        for (int k = 1; k <= M + 1; ++k) inv_fact[k] = inv_fact[k - 1] / k;

        // q = series of (e^x-1)/x * (e^{ax}-1)/(ax)
        std::vector<double> c1(M + 1), c2(M + 1);
        double ap = 1.0;
        for (int k = 0; k <= M; ++k) {
            c1[k] = inv_fact[k + 1];
            c2[k] = inv_fact[k + 1] * ap;
            ap *= a;
        }
        std::vector<double> q(M + 1, 0.0);
        for (int i = 0; i <= M; ++i)
            for (int j = 0; i + j <= M; ++j) q[i + j] += c1[i] * c2[j];
        // r = 1/q
        std::vector<double> r(M + 1, 0.0);
        r[0] = 1.0;
        for (int j = 1; j <= M; ++j) {
            double s = 0.0;
            for (int i = 1; i <= j; ++i) s += q[i] * r[j - i];
            r[j] = -s;
        }
        poly.resize(M - 1);
        for (int j = 2; j <= M; ++j) {
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            double b = sign * inv_fact[j] - 0.5 * (1.0 - a) * sign * inv_fact[j - 1];
            poly[static_cast<size_t>(j - 2)] = b - r[j];
        }
    }

    double operator()(double x) const {
        if (x < x0) {
            double v = 0.0;
            for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j)
                v = v * x + poly[static_cast<size_t>(j)];
            return v;
        }
        const double ex = std::exp(-x);
        double third = 0.0;
        if ((1.0 + a) * x < 745.0) {
            const double e1 = -std::expm1(-x);
            const double e2 = -std::expm1(-a * x);
            third = a * std::exp(-(1.0 + a) * x) / (e1 * e2);
        }
        return ex / (x * x) + 0.5 * (1.0 - a) * ex / x - third;
    }
};

// 1/2 + 1/(e^x - 1) - 1/x, series below 0.5
inline double bernoulli_kernel(double x) {
    if (x < 0.5) {
        // B_2k / (2k)!
        static const double c[7] = {
            1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
            2.0876756987868099e-8, -5.2841901386874931e-10, 1.3382536530684679e-11,
        };
        const double x2 = x * x;
        double v = 0.0;
        for (int k = 6; k >= 0; --k) v = v * x2 + c[k];
        return v * x;
    }
    return 0.5 + 1.0 / std::expm1(x) - 1.0 / x;
}

} // namespace detail

// S(a) from the integral with e^{-x}/x^2 subtraction terms.
inline EvalResult s_integral_a(double a, double tol = 1e-12) {
    if (!(a > 0.0)) throw std::domain_error("s_integral_a: a must be positive");
    if (tol < 1e-13) tol = 1e-13;
    detail::IntegralABracket bracket(a);
    auto q = exp_sinh([&](double x) { return bracket(x); }, 0.5 * tol, 1.0, 10);
    EvalResult out;
    out.value = kHalfLog2PiMinusGamma - 1.0 + 0.5 * (1.0 + a) * kEulerGamma - q.value;
    out.abs_err = q.err + 2e-16 * (std::fabs(out.value) + 1.0);
    out.route = Route::IntegralA;
    out.work = q.evals;
    return out;
}

// S(a) from the compact integral form.
inline EvalResult s_integral_b(double a, double tol = 1e-12) {
    if (!(a > 0.0)) throw std::domain_error("s_integral_b: a must be positive");
    if (tol < 1e-13) tol = 1e-13;
    auto f = [a](double x) {
        const double y = x / a;
        if (y > 745.0) return 0.0;
        const double v = 1.0 / std::expm1(y);
        return v * detail::bernoulli_kernel(x);
    };
    auto q = exp_sinh(f, 0.5 * tol, std::min(a, 1.0), 10);
    EvalResult out;
    out.value = q.value;
    out.abs_err = q.err + 2e-16 * (std::fabs(out.value) + 1.0);
    out.route = Route::IntegralB;
    out.work = q.evals;
    return out;
}

// Closed form for S(n/m), coprime n, m.
inline EvalResult s_rational(const Rational& q) {
    const double n = static_cast<double>(q.n);
    const double m = static_cast<double>(q.m);
    const double v = kHalfLog2PiMinusGamma - 0.5 / m - 0.5 * std::log(m / n) +
                     kPi / (2.0 * n) * cot_sum(q.n, q.m) +
                     n * kPi / (2.0 * m * m) * cot_sum(q.m, q.n);
    EvalResult out;
    out.value = v;
    out.abs_err = 1e-14 * std::fabs(v) + 1e-15;
    out.route = Route::Rational;
    out.work = q.n + q.m;
    return out;
}

// S(a) = 2 sum tau(n) * cos_tail_integral(2 n pi / a), with the tail past N
// resummed analytically through zeta(s)^2 = sum tau(n)/n^s.
inline EvalResult s_divisor(double a, double tol = 1e-12) {
    if (!(a > 0.0)) throw std::domain_error("s_divisor: a must be positive");
    if (a > 4.0)
        throw std::domain_error("s_divisor: restricted to a <= 4");
    if (tol < 1e-13) tol = 1e-13;

    const long N = std::max<long>(64, static_cast<long>(std::ceil(64.0 * a)));
    CompensatedSum<double> acc;
    std::vector<double> tau(static_cast<size_t>(N) + 1, 0.0);
    for (long n = 1; n <= N; ++n) {
        tau[static_cast<size_t>(n)] = static_cast<double>(divisor_count(n));
        acc.add(2.0 * tau[static_cast<size_t>(n)] *
                cos_tail_integral(2.0 * static_cast<double>(n) * kPi / a));
    }

    // tail: 2 sum_m (-1)^m (2m+1)! (a/2pi)^{2m+2} [zeta(2m+2)^2 - partial]
    double tail = 0.0;
    double fact = 1.0;  // (2m+1)!
    double pw = a / (2.0 * kPi);
    pw *= pw;
    double pow_term = pw;
    double last = 0.0;
    for (int m = 0; m <= 8; ++m) {
        if (m > 0) {
            fact *= (2.0 * m) * (2.0 * m + 1.0);
            pow_term *= pw;
        }
        const double s = 2.0 * m + 2.0;
        double remainder = std::norm(zeta_strip({s, 0.0}));
        for (long n = 1; n <= N; ++n)
            remainder -= tau[static_cast<size_t>(n)] / std::pow(static_cast<double>(n), s);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        last = 2.0 * sign * fact * pow_term * remainder;
        tail += last;
        if (std::fabs(last) < 1e-16 * (std::fabs(tail) + 1e-6)) break;
    }

    EvalResult out;
    out.value = acc.value() + tail;
    out.abs_err = std::fabs(last) + static_cast<double>(N) * 1e-16 +
                  2e-16 * std::fabs(out.value);
    out.route = Route::Divisor;
    out.work = N;
    return out;
}

// Right-hand side of the functional equation given s_inv = S(1/a).
inline double functional_map(double a, double s_inv) {
    if (!(a > 0.0)) throw std::domain_error("functional_map: a must be positive");
    return a * s_inv + kHalfLog2PiMinusGamma * (1.0 - a) +
           0.5 * (a + 1.0) * std::log(a);
}

// Dispatcher: a > 1 reduces through the functional equation, a <= 1 uses
// the series by default.  Route overridable.
inline EvalResult s_eval(double a, double tol = 1e-12, Route route = Route::Auto) {
    if (a < 0.0) throw std::domain_error("s_eval: a must be >= 0");
    if (a == 0.0) return {0.0, 0.0, Route::Series, 0};
    if (tol < 1e-13) tol = 1e-13;

    switch (route) {
        case Route::Series: return s_series(a, tol);
        case Route::IntegralA: return s_integral_a(a, tol);
        case Route::IntegralB: return s_integral_b(a, tol);
        case Route::Divisor: return s_divisor(a, tol);
        default: break;
    }
    if (a > 1.0 || route == Route::FunctionalMap) {
        EvalResult inner = s_series(1.0 / a, tol / (2.0 * std::max(a, 1.0)));
        EvalResult out;
        out.value = functional_map(a, inner.value);
        out.abs_err = a * inner.abs_err + 4e-16 * (std::fabs(out.value) + 1.0);
        out.route = Route::FunctionalMap;
        out.work = inner.work;
        return out;
    }
    return s_series(a, tol);
}

// dS/da by fourth-order central differences of s_eval.
inline double s_derivative(double a, double h = 1e-3) {
    if (!(a - 2.0 * h > 0.0))
        throw std::domain_error("s_derivative: requires a - 2h > 0");
    auto f = [](double x) { return s_eval(x, 1e-13).value; };
    return (-f(a + 2.0 * h) + 8.0 * f(a + h) - 8.0 * f(a - h) + f(a - 2.0 * h)) /
           (12.0 * h);
}

} // namespace sphi
