#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "sphi/fourier.hpp"
#include "sphi/phi.hpp"
#include "sphi/sfunc.hpp"
#include "sphi/theorem.hpp"

namespace sphi {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    bool reduced = false;        // lighter grids for the CLI selftest
    double gamma1 = 14.1347251417;  // first critical-line ordinates; overridable
    double gamma2 = 21.0220396388;  // to probe sensitivity in tests
    double euler_gamma_shift = 0.0;  // perturbs the constant used in criterion 3
};

namespace detail {

inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

} // namespace detail

// 1. Closed-form spot values of S.
inline CheckResult check_spot_values(const CheckOptions& = {}) {
    CheckResult r{1, "closed-form spot values", false, ""};
    const double s1 = 0.5 * (kLogTwoPi - kEulerGamma - 1.0);
    const double s2 = 0.5 * (std::log(4.0 * kPi) - 1.0 - kEulerGamma);
    const double s3 = 0.5 * (std::log(6.0 * kPi) - 1.0 - kEulerGamma) +
                      kPi / (6.0 * std::sqrt(3.0));
    const double d1 = std::fabs(s_eval(1.0).value - s1);
    const double d2 = std::fabs(s_eval(2.0).value - s2);
    const double d3 = std::fabs(s_eval(3.0).value - s3);
    const double worst = std::max({d1, d2, d3});
    r.passed = worst <= 1e-12;
    r.detail = detail::fmt("max |dS| = %.3e (tol 1e-12)", worst);
    return r;
}

// 2. Pairwise agreement of the five evaluation routes.
inline CheckResult check_route_agreement(const CheckOptions& opt = {}) {
    CheckResult r{2, "route cross-agreement", false, ""};
    struct Probe { double a; long n, m; };
    std::vector<Probe> probes = {{0.1, 1, 10}, {0.25, 1, 4}, {1.0 / 3.0, 1, 3},
                                 {0.5, 1, 2},  {2.0 / 3.0, 2, 3}, {0.9, 9, 10},
                                 {1.0, 1, 1}};
    if (opt.reduced) probes = {{0.25, 1, 4}, {0.5, 1, 2}, {1.0, 1, 1}};
    double worst = 0.0;
    for (const auto& p : probes) {
        std::vector<double> v = {
            s_series(p.a).value, s_integral_a(p.a).value, s_integral_b(p.a).value,
            s_divisor(p.a).value, s_rational(Rational{p.n, p.m}).value};
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                worst = std::max(worst, std::fabs(v[i] - v[j]));
    }
    r.passed = worst <= 1e-11;
    r.detail = detail::fmt("max pairwise |dS| = %.3e (tol 1e-11)", worst);
    return r;
}

// 3. Functional-equation residual on a log grid.
inline CheckResult check_functional_equation(const CheckOptions& opt = {}) {
    CheckResult r{3, "functional equation", false, ""};
    const int n = opt.reduced ? 12 : 50;
    const double lo = std::log(0.05), hi = std::log(20.0);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = std::exp(lo + (hi - lo) * i / (n - 1.0));
        const double lhs = s_eval(a).value;
        const double c = kHalfLog2PiMinusGamma - 0.5 * opt.euler_gamma_shift;
        const double rhs = a * s_eval(1.0 / a).value + c * (1.0 - a) +
                           0.5 * (a + 1.0) * std::log(a);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    r.passed = worst <= 1e-10;
    r.detail = detail::fmt("max residual = %.3e (tol 1e-10)", worst);
    return r;
}

// 4. S'(1) = 1/4.
inline CheckResult check_derivative(const CheckOptions& = {}) {
    CheckResult r{4, "derivative at a = 1", false, ""};
    const double d = std::fabs(s_derivative(1.0) - 0.25);
    r.passed = d <= 1e-8;
    r.detail = detail::fmt("|S'(1) - 1/4| = %.3e (tol 1e-8)", d);
    return r;
}

// 5. Small-a quadratic law S(a) ~ pi^2 a^2 / 72.
inline CheckResult check_small_a(const CheckOptions& = {}) {
    CheckResult r{5, "small-a law", false, ""};
    double lo = 2.0, hi = 0.0;
    for (double a : {0.005, 0.01, 0.02}) {
        const double ratio = s_eval(a).value * 72.0 / (kPi * kPi * a * a);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    r.passed = lo >= 0.99 && hi <= 1.01;
    r.detail = detail::fmt("ratio range [%.6f, %.6f] (need [0.99, 1.01])", lo, hi);
    return r;
}

// 6. phi evenness, positivity, value at 0, large-t asymptote.
inline CheckResult check_phi_properties(const CheckOptions& opt = {}) {
    CheckResult r{6, "phi properties", false, ""};
    const int n = opt.reduced ? 8 : 25;
    double even_worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 0.1 + (10.0 - 0.1) * i / (n - 1.0);
        even_worst = std::max(even_worst, std::fabs(phi_raw(t) - phi_raw(-t)));
    }
    bool positive = true;
    for (int i = 0; i <= (opt.reduced ? 30 : 120); ++i) {
        const double t = 30.0 * i / (opt.reduced ? 30.0 : 120.0);
        if (!(phi(t) > 0.0)) positive = false;
    }
    const double d0 = std::fabs(phi(0.0) - (1.0 + kLogTwoPi - kEulerGamma));
    double ratio_lo = 2.0, ratio_hi = 0.0;
    for (double t = 12.0; t <= 20.0 + 1e-9; t += 1.0) {
        const double ratio = phi(t) / (4.0 * t * std::exp(-t));
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }
    r.passed = even_worst <= 1e-11 && positive && d0 <= 1e-11 &&
               ratio_lo >= 0.95 && ratio_hi <= 1.05;
    r.detail = detail::fmt("evenness %.2e, |dphi(0)| %.2e, asym [%.4f",
                           even_worst, d0, ratio_lo) +
               detail::fmt(", %.4f]", ratio_hi) +
               (positive ? "" : ", positivity FAILED");
    return r;
}

// 7. Approximant quality of phi0 and phi1.
inline CheckResult check_approximants(const CheckOptions& opt = {}) {
    CheckResult r{7, "approximant quality", false, ""};
    const double step = opt.reduced ? 0.25 : 0.05;
    double w0 = 0.0, w1 = 0.0;
    for (double t = 0.25; t <= 6.0 + 1e-9; t += step) {
        const double p = phi(t);
        w0 = std::max(w0, std::fabs(phi0(t) - p) / p);
        w1 = std::max(w1, std::fabs(phi1(t) - p) / p);
    }
    r.passed = w0 <= 0.05 && w1 <= 8e-3;
    r.detail = detail::fmt("max rel dev phi0 %.4f (tol 0.05), phi1 %.5f (tol 8e-3)",
                           w0, w1);
    return r;
}

// 8. phi0 transform: analytic series vs quadrature.
inline CheckResult check_transform_series(const CheckOptions& opt = {}) {
    CheckResult r{8, "phi0 transform series vs quadrature", false, ""};
    std::vector<std::complex<double>> ks = {{2, 0}, {5, 0}, {10, 0}, {20, 0},
                                            {10, 0.5}};
    if (opt.reduced) ks = {{2, 0}, {10, 0.5}};
    double worst = 0.0;
    for (const auto& k : ks) {
        const auto s = phi0_ft_series(k);
        const auto q = phi0_ft_quad(StripPoint(k.real(), k.imag()));
        worst = std::max(worst, std::abs(s - q));
    }
    r.passed = worst <= 1e-8;
    r.detail = detail::fmt("max |series - quad| = %.3e (tol 1e-8)", worst);
    return r;
}

// 9. Real zeros of the scaled phi transform at twice the zeta ordinates.
inline CheckResult check_zero_mapping(const CheckOptions& opt = {}) {
    CheckResult r{9, "transform zeros at 2*gamma", false, ""};
    struct Window { double lo, hi, target; };
    const std::vector<Window> wins = {{25.0, 30.0, 2.0 * opt.gamma1},
                                      {40.0, 44.0, 2.0 * opt.gamma2}};
    const double step = opt.reduced ? 1.0 : 0.25;
    bool all = true;
    std::string det;
    for (const auto& w : wins) {
        auto zs = find_real_zeros(w.lo, w.hi, step, 1e-6, 1e-10);
        bool hit = false;
        for (const auto& z : zs) {
            if (std::fabs(z.root - w.target) <= 0.02) {
                const double n1 = std::fabs(scaled_ft(z.root - 1.25));
                const double n2 = std::fabs(scaled_ft(z.root + 1.25));
                const double scale = 0.5 * (n1 + n2);
                if (z.residual <= 1e-3 * scale) hit = true;
                det += detail::fmt("root %.5f residual %.2e; ", z.root, z.residual);
            }
        }
        if (!hit) {
            all = false;
            det += detail::fmt("no qualifying zero near %.5f (%.0f found); ",
                               w.target, static_cast<double>(zs.size()));
        }
    }
    r.passed = all;
    r.detail = det;
    return r;
}

// 10. Circle-integral vanishing at a zeta zero; non-vanishing probe matched
// against the transform limit.
inline CheckResult check_circle_integral(const CheckOptions& opt = {}) {
    CheckResult r{10, "circle integral at zeta zero", false, ""};
    using C = std::complex<double>;
    const C z1(0.5, opt.gamma1);
    std::vector<double> eps = {1e-2, 3e-3, 1e-3};
    if (opt.reduced) eps = {1e-2, 3e-3};
    const int nth = opt.reduced
                        ? 128
                        : std::max(128, 32 * static_cast<int>(std::ceil(opt.gamma1)));
    std::vector<double> mags;
    for (double e : eps) mags.push_back(std::abs(I_eval(e, z1, nth, 1e-10, false).value));
    bool decreasing = true;
    for (size_t i = 1; i < mags.size(); ++i)
        if (!(mags[i] < mags[i - 1])) decreasing = false;

    const C z2(0.5, 10.0);
    const double i2 =
        std::abs(I_eval(eps.back(), z2, opt.reduced ? 128 : 384, 1e-10, false).value);
    const double ref =
        std::abs(4.0 * std::sin(kPi * z2) / kPi * phi_ft(StripPoint(20.0), 1e-10));
    const bool probe_ok = ref > 0.0 && std::fabs(i2 / ref - 1.0) <= 0.05;

    r.passed = decreasing && probe_ok;
    r.detail = detail::fmt("|I| = %.4e, %.4e", mags[0], mags[1]) +
               (mags.size() > 2 ? detail::fmt(", %.4e", mags[2]) : std::string()) +
               detail::fmt("; probe |I| %.4e vs ref %.4e", i2, ref);
    return r;
}

// 11. h-kernel decomposition residual shrinks with eps.
inline CheckResult check_decomposition(const CheckOptions& opt = {}) {
    CheckResult r{11, "h-kernel decomposition", false, ""};
    std::vector<double> ts = {0.5, 1.0, 2.0};
    if (opt.reduced) ts = {0.5, 1.0};
    const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
    bool all = true;
    std::string det;
    for (double t : ts) {
        double prev = 1e300;
        for (double e : eps) {
            const double model =
                (psi_edge(t + 0.5 * std::log(e)) + psi_edge(-t + 0.5 * std::log(e))) /
                    std::sqrt(e) +
                phi(t);
            const double res = std::fabs(h_kernel(t, e) - model);
            if (!(res < prev)) all = false;
            prev = res;
        }
        det += detail::fmt("t=%.1f final res %.2e; ", t, prev);
    }
    r.passed = all;
    r.detail = det + (all ? "monotone" : "NOT monotone");
    return r;
}

// 12. phi0 transform keeps one sign; scaled magnitude flattens.
inline CheckResult check_no_zero_band(const CheckOptions& opt = {}) {
    CheckResult r{12, "phi0 scaled transform no-zero band", false, ""};
    const double step = opt.reduced ? 0.5 : 0.05;
    bool one_sign = true;
    const double s0 = scaled_phi0_ft(0.0);
    for (double k = 0.0; k <= 60.0 + 1e-9; k += step)
        if (!(scaled_phi0_ft(k) * s0 > 0.0)) one_sign = false;
    const double a = scaled_phi0_ft(25.0), b = scaled_phi0_ft(35.0);
    const double dev = std::fabs(a / b - 1.0);
    r.passed = one_sign && dev <= 0.05;
    r.detail = std::string(one_sign ? "sign uniform" : "sign CHANGE found") +
               detail::fmt("; |s(25)/s(35)-1| = %.4f (tol 0.05)", dev);
    return r;
}

inline std::vector<CheckResult> run_all_checks(const CheckOptions& opt = {}) {
    return {check_spot_values(opt),      check_route_agreement(opt),
            check_functional_equation(opt), check_derivative(opt),
            check_small_a(opt),          check_phi_properties(opt),
            check_approximants(opt),     check_transform_series(opt),
            check_zero_mapping(opt),     check_circle_integral(opt),
            check_decomposition(opt),    check_no_zero_band(opt)};
}

} // namespace sphi
