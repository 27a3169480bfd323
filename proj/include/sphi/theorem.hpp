#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "sphi/fourier.hpp"
#include "sphi/phi.hpp"
#include "sphi/quadrature.hpp"
#include "sphi/special.hpp"

namespace sphi {

struct TheoremReport {
    std::complex<double> z;
    std::vector<double> eps_list;
    std::vector<double> abs_I;
    double transform_scaled_residual = 0.0;
    double neighbor_scale = 0.0;
    bool passed = false;
};

namespace detail {

// Distance from point p to the ray { r e^{i alpha} : r > 0 }.
inline double ray_distance(std::complex<double> p, double alpha) {
    const std::complex<double> q = p * std::exp(std::complex<double>(0.0, -alpha));
    if (q.real() > 0.0) return std::fabs(q.imag());
    return std::abs(p);
}

} // namespace detail

// F(z; w) = (1/Gamma(z)) integral_0^inf t^{z-1} / (e^t - 1 + w) dt.
//
// The path is rotated to the ray t = e^{u + i alpha} with alpha signed like
// Im z, which removes the e^{pi |Im z| / 2} conditioning loss of the real
// axis.  The w-pole at t = ln(1-w) is picked up as an explicit residue when
// the rotation sweeps past it.
inline std::complex<double> F_eval(std::complex<double> z, std::complex<double> w,
                                   double tol = 1e-10) {
    using C = std::complex<double>;
    if (!(z.real() > 0.0))
        throw std::domain_error("F_eval: requires Re z > 0");
    if (std::abs(w) == 0.0 || std::fabs(std::arg(w)) > kPi - 1e-3)
        throw std::domain_error("F_eval: w must satisfy |arg w| <= pi - 1e-3");

    const double y = z.imag();
    const double alpha = (y >= 0.0) ? 1.2 : -1.2;
    const C rot = std::exp(C(0.0, alpha));

    // pole of the integrand closest to the deformation sector
    C t0(0.0, 0.0);
    bool has_pole = std::abs(1.0 - w) > 1e-300;
    if (has_pole) {
        t0 = std::log(1.0 - w);
        if (std::abs(t0) > 1e-300 && detail::ray_distance(t0, alpha) < 1e-8)
            throw std::runtime_error("F_eval: integration path too close to pole");
    }

    const double x = z.real();
    const double aw = std::max(std::abs(w), 1e-30);
    const double u_min = std::min(-8.0, (std::log(aw) + std::log(tol) - 5.0) / x);
    const double u_max = std::log(120.0 / std::cos(alpha));

    auto integrand = [&](double u) {
        const C t = std::exp(u) * rot;
        const C tz = std::exp(z * (u + C(0.0, alpha)));
        C denom;
        if (t.real() > 1e-3 || std::abs(t) > 1e-3)
            denom = std::exp(t) - 1.0 + w;
        else
            denom = t * (1.0 + t * (0.5 + t / 6.0)) + w;  // expm1-style near 0
        return tz / denom;
    };

    const double ay = std::fabs(y);
    const double chunk = std::min(3.0, 6.0 * kPi / (ay + 1.0) + 0.2);
    const double gamma_mag = std::abs(complex_gamma(z));
    const double tol_int = tol * std::max(gamma_mag, 1e-30);

    const long n_chunks =
        std::max<long>(1, static_cast<long>(std::ceil((u_max - u_min) / chunk)));
    const double h = (u_max - u_min) / static_cast<double>(n_chunks);
    CompensatedSum<C> acc;
    for (long i = 0; i < n_chunks; ++i) {
        auto q = adaptive_gk(integrand, u_min + static_cast<double>(i) * h,
                             u_min + static_cast<double>(i + 1) * h,
                             tol_int / static_cast<double>(n_chunks), 2000);
        acc.add(q.value);
    }
    C integral = acc.value();

    if (has_pole && std::abs(t0) > 1e-300) {
        const double a0 = std::arg(t0);
        const bool crossed = (alpha > 0.0) ? (a0 > 0.0 && a0 < alpha)
                                           : (a0 < 0.0 && a0 > alpha);
        if (crossed) {
            const C res = std::pow(t0, z - 1.0) * std::exp(-t0);
            integral += (alpha > 0.0 ? 1.0 : -1.0) * C(0.0, 2.0 * kPi) * res;
        }
    }
    return integral / complex_gamma(z);
}

// Small-w closed form zeta(z) + Gamma(1-z) w^{z-1} (1 + (1+z) w / 2).
inline std::complex<double> F_asymptotic(std::complex<double> z,
                                         std::complex<double> w) {
    if (!(z.real() > 0.0 && z.real() < 1.0))
        throw std::domain_error("F_asymptotic: requires 0 < Re z < 1");
    return zeta_strip(z) +
           complex_gamma(1.0 - z) * std::pow(w, z - 1.0) * (1.0 + 0.5 * (1.0 + z) * w);
}

struct CircleIntegral {
    std::complex<double> value;
    double err = 0.0;
};

// I(eps; z): angular average of F(z; w) F(1-z; w) over |w| = eps.
// Midpoint nodes respect the open domain -pi < arg w < pi; the error
// estimate comes from halving the node count.
inline CircleIntegral I_eval(double eps, std::complex<double> z, int n_theta = 256,
                             double tol = 1e-10, bool estimate = true) {
    using C = std::complex<double>;
    if (!(eps >= 1e-5 && eps <= 1e-1))
        throw std::domain_error("I_eval: eps must lie in [1e-5, 1e-1]");
    if (n_theta < 64) n_theta = 64;

    auto average = [&](int n) {
        CompensatedSum<C> acc;
        for (int j = 0; j < n; ++j) {
            const double theta = -kPi + (2.0 * j + 1.0) * kPi / n;
            const C w = eps * std::exp(C(0.0, theta));
            acc.add(F_eval(z, w, tol) * F_eval(1.0 - z, w, tol));
        }
        return acc.value() / static_cast<double>(n);
    };

    CircleIntegral out;
    out.value = average(n_theta);
    if (estimate) out.err = std::abs(out.value - average(n_theta / 2));
    return out;
}

namespace detail {

// integral_x^inf ds / (s (e^s - 1)) = integral_0^inf dv / (e^{x e^v} - 1)
inline double boundary_integral(double x, double tol) {
    if (x > 700.0) return 0.0;
    const double vmax = std::log(745.0 / x) + 1.0;
    auto f = [x](double v) {
        const double s = x * std::exp(v);
        if (s > 700.0) return 0.0;
        return 1.0 / std::expm1(s);
    };
    const long n_chunks = std::max<long>(2, static_cast<long>(std::ceil(vmax / 2.0)));
    const double h = vmax / static_cast<double>(n_chunks);
    CompensatedSum<double> acc;
    for (long i = 0; i < n_chunks; ++i)
        acc.add(adaptive_gk(f, i * h, (i + 1) * h, tol / n_chunks).value);
    return acc.value();
}

// constant C in integral_x^inf ds/(s(e^s-1)) = 1/x + (ln x)/2 + C + O(x),
// calibrated once at x = 1e-4 and frozen.
inline double boundary_constant() {
    static const double c = [] {
        const double x0 = 1e-4;
        return boundary_integral(x0, 1e-13) - 1.0 / x0 - 0.5 * std::log(x0) +
               x0 / 12.0;
    }();
    return c;
}

} // namespace detail

// psi-edge kernel e^t integral_{e^{2t}}^inf ds/(s(e^s-1)) - e^{-t}.
// For t <= -2 the cancellation against e^{-t} is removed analytically via
// the small-x expansion of the boundary integral.
inline double psi_edge(double t, double tol = 1e-10) {
    if (!(t >= -20.0 && t <= 20.0))
        throw std::domain_error("psi_edge: t out of supported range");
    if (t <= -2.0) {
        const double et = std::exp(t);
        const double C = detail::boundary_constant();
        return t * et + C * et - std::exp(3.0 * t) / 12.0 +
               std::exp(7.0 * t) / 2160.0;
    }
    const double x = std::exp(2.0 * t);
    if (x > 700.0) return -std::exp(-t);
    const double J = detail::boundary_integral(x, 0.5 * tol * std::exp(-t));
    return std::exp(t) * J - std::exp(-t);
}

// h(t; eps): the bracketed difference of the two s-integrals times e^{-t}.
inline double h_kernel(double t, double eps, double tol = 1e-8) {
    if (!(t >= 0.0)) throw std::domain_error("h_kernel: t must be >= 0");
    if (!(eps >= 1e-6 && eps <= 1e-1))
        throw std::domain_error("h_kernel: eps must lie in [1e-6, 1e-1]");

    const double q = std::exp(-2.0 * t);
    const double s_split = eps * std::exp(2.0 * t);
    const double tol_each = 0.25 * tol * (1.0 + 1.0 / std::sqrt(eps));

    // A = integral_{eps e^{2t}}^inf ds / ((e^s - 1)(e^{s q} - 1)), s = s0 e^v
    double A = 0.0;
    if (s_split < 50.0) {
        const double vmax = std::log(50.0 / s_split);
        auto fa = [&](double v) {
            const double s = s_split * std::exp(v);
            return s / (std::expm1(s) * std::expm1(s * q));
        };
        const long nc = std::max<long>(2, static_cast<long>(std::ceil(vmax / 2.0)));
        const double h = vmax / static_cast<double>(nc);
        CompensatedSum<double> acc;
        for (long i = 0; i < nc; ++i)
            acc.add(adaptive_gk(fa, i * h, (i + 1) * h, tol_each / nc).value);
        A = acc.value();
    }

    // B = integral_eps^{eps e^{2t}} ds / ((e^s - 1)(e^s - e^{s q})), s = eps e^v
    double B = 0.0;
    if (t > 0.0) {
        const double vmax = std::min(2.0 * t, std::log(50.0 / eps));
        auto fb = [&](double v) {
            const double s = eps * std::exp(v);
            const double gap = std::exp(s * q) * std::expm1(s * (1.0 - q));
            return s / (std::expm1(s) * gap);
        };
        const long nc = std::max<long>(2, static_cast<long>(std::ceil(vmax / 2.0)));
        const double h = vmax / static_cast<double>(nc);
        CompensatedSum<double> acc;
        for (long i = 0; i < nc; ++i)
            acc.add(adaptive_gk(fb, i * h, (i + 1) * h, tol_each / nc).value);
        B = acc.value();
    }
    return std::exp(-t) * (A - B);
}

// Complex Fourier transform of psi_edge (decays like t e^{-|t|} both ways).
inline std::complex<double> psi_edge_ft(const StripPoint& k, double tol = 1e-8) {
    using C = std::complex<double>;
    const double b = std::fabs(k.im_k);
    const double c = 1.0 - b;
    double T = 30.0 / c;
    for (int i = 0; i < 5; ++i)
        T = std::log(16.0 * (T + 1.0 / c) / (c * tol)) / c;
    T = std::min(T, 20.0);  // psi_edge domain bound; tail < e^-20 level

    const C kc = k.as_complex();
    const double width = std::min(2.0, kPi / std::max(std::fabs(k.re_k), 1.0));
    const long panels = std::max<long>(1, static_cast<long>(std::ceil(2.0 * T / width)));
    const double h = 2.0 * T / static_cast<double>(panels);
    CompensatedSum<C> acc;
    for (long p = 0; p < panels; ++p) {
        double e;
        acc.add(gk15(
            [&](double t) {
                return psi_edge(t, tol * 1e-2) * std::exp(C(0.0, 1.0) * kc * t);
            },
            -T + static_cast<double>(p) * h, -T + static_cast<double>(p + 1) * h, e));
    }
    return acc.value();
}

// Run the eps sweep of |I| plus the transform-at-mapped-wavenumber check
// and assemble the verdict.
inline TheoremReport theorem_demo(double x, double y, std::vector<double> eps_list,
                                  double tol = 1e-10) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("theorem_demo: x must lie in (0, 1)");
    for (size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw std::domain_error("theorem_demo: eps_list must be decreasing");

    TheoremReport rep;
    rep.z = {x, y};
    rep.eps_list = eps_list;
    const int n_theta = std::max(128, 32 * static_cast<int>(std::ceil(std::fabs(y))));
    for (double e : eps_list)
        rep.abs_I.push_back(std::abs(I_eval(e, rep.z, n_theta, tol, false).value));

    const ZetaZeroMapResult map = verify_zeta_zero_map(x, y, tol);
    rep.transform_scaled_residual = map.scaled_residual;
    rep.neighbor_scale = map.neighbor_scale;

    bool decreasing = rep.abs_I.size() >= 3;
    const size_t n = rep.abs_I.size();
    for (size_t i = n >= 3 ? n - 2 : 1; i < n; ++i)
        if (!(rep.abs_I[i] < rep.abs_I[i - 1])) decreasing = false;
    rep.passed = decreasing && map.pass;
    return rep;
}

} // namespace sphi
