#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "sphi/phi.hpp"
#include "sphi/quadrature.hpp"

namespace sphi {

// Complex wavenumber constrained to the absolute-convergence strip.
struct StripPoint {
    double re_k;
    double im_k;
    StripPoint(double re, double im = 0.0) : re_k(re), im_k(im) {
        if (!(std::fabs(im) < 1.0))
            throw std::domain_error("StripPoint: requires |Im k| < 1");
    }
    std::complex<double> as_complex() const { return {re_k, im_k}; }
};

struct ZeroBracket {
    double k_lo = 0.0;
    double k_hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
    double root = 0.0;
    double residual = 0.0;
};

namespace detail {

// 2 * integral_0^T f(t) cos(kt) dt for even f with |f| <= 4 t e^{-t} tails.
// T solves the tail inequality with a safety factor 2; panel width is locked
// to a half period so the Gauss-Kronrod rule does not degrade with k.
template <class F>
QuadResult<std::complex<double>> even_cos_transform(F&& f, std::complex<double> k,
                                                    double tol) {
    const double b = std::fabs(k.imag());
    if (!(b < 1.0 - 1e-6))
        throw std::domain_error("even_cos_transform: wavenumber outside strip");
    const double c = 1.0 - b;

    double T = 30.0 / c;
    for (int i = 0; i < 5; ++i) {
        const double arg = 16.0 * (T + 1.0 / c) / (c * tol);
        T = std::log(arg) / c;
    }
    if (!(T < 700.0))
        throw std::runtime_error("even_cos_transform: tolerance unreachable");
    const double tail_bound = 8.0 * std::exp(-c * T) * (T + 1.0 / c) / c;

    double width = std::min(2.0, kPi / std::max(std::fabs(k.real()), 1.0));
    QuadResult<std::complex<double>> out;
    for (int pass = 0; pass < 4; ++pass) {
        const long panels = std::max<long>(1, static_cast<long>(std::ceil(T / width)));
        const double h = T / static_cast<double>(panels);
        CompensatedSum<std::complex<double>> acc;
        double err = 0.0;
        long evals = 0;
        for (long p = 0; p < panels; ++p) {
            double e;
            auto v = gk15(
                [&](double t) {
                    return 2.0 * f(t) * std::cos(k * t);
                },
                static_cast<double>(p) * h, static_cast<double>(p + 1) * h, e);
            acc.add(v);
            err += e;
            evals += 15;
        }
        out.value = acc.value();
        out.err = err + tail_bound;
        out.evals += evals;
        if (err <= 0.5 * tol) break;
        width *= 0.5;
    }
    return out;
}

} // namespace detail

// Complex Fourier transform of phi on the strip.
inline std::complex<double> phi_ft(const StripPoint& k, double tol = 1e-10) {
    auto q = detail::even_cos_transform(
        [tol](double t) { return phi(t, tol * 1e-2); }, k.as_complex(), tol);
    return q.value;
}

// Analytic transform series of phi0 (Re k > 0): two alternating families,
// integer terms with rate pi/omega and half-integer terms with rate
// pi/(1-omega).
inline std::complex<double> phi0_ft_series(std::complex<double> k, int n_max = 400) {
    if (!(k.real() > 0.0))
        throw std::domain_error("phi0_ft_series: requires Re k > 0; use evenness");
    if (!(std::fabs(k.imag()) < 1.0))
        throw std::domain_error("phi0_ft_series: outside strip");
    const double w = phi_params().omega;
    const double w1 = 1.0 - w;

    CompensatedSum<std::complex<double>> acc;
    double sign = 1.0;
    for (int n = 1; n <= n_max; ++n, sign = -sign) {
        const double nd = static_cast<double>(n);
        const double cd = std::cos(nd * kPi * w1 / w);
        const double sd = std::sin((nd - 0.5) * kPi * w / w1);
        if (std::fabs(cd) < 1e-8 || std::fabs(sd) < 1e-8)
            throw std::runtime_error("phi0_ft_series: resonant denominator");
        const std::complex<double> t_int =
            nd * std::exp(-nd * kPi * k / w) / (w * w * cd);
        const std::complex<double> t_half =
            (nd - 0.5) * std::exp(-(nd - 0.5) * kPi * k / w1) / (w1 * w1 * sd);
        acc.add(sign * 2.0 * kPi * kPi * (t_int + t_half));
        const double mag = std::abs(t_int) + std::abs(t_half);
        if (n >= 2 && mag * 2.0 * kPi * kPi < 1e-16 * std::abs(acc.value())) break;
    }
    return acc.value();
}

// Quadrature cross-check of the phi0 transform.
inline std::complex<double> phi0_ft_quad(const StripPoint& k, double tol = 1e-10) {
    auto q = detail::even_cos_transform([](double t) { return phi0(t); },
                                        k.as_complex(), tol);
    return q.value;
}

inline double transform_scaling(double re_k) {
    const double w = phi_params().omega;
    return std::exp(kPi * std::fabs(re_k) / (2.0 * (1.0 - w)));
}

// phi transform on the real axis times the underflow-compensating scaling.
inline double scaled_ft(double k, double tol = 1e-10) {
    const std::complex<double> v = phi_ft(StripPoint(k), tol);
    return v.real() * transform_scaling(k);
}

// Same scaling applied to the phi0 transform (series for k > 0, quadrature
// at k = 0 where the series does not apply).
inline double scaled_phi0_ft(double k, double tol = 1e-10) {
    const double ak = std::fabs(k);
    if (ak < 1e-12) return phi0_ft_quad(StripPoint(0.0), tol).real();
    return phi0_ft_series({ak, 0.0}).real() * transform_scaling(ak);
}

// Scan the scaled transform for sign changes and refine each by bisection.
inline std::vector<ZeroBracket> find_real_zeros(double k_min, double k_max,
                                                double step, double tol,
                                                double quad_tol = 1e-10) {
    if (!(k_min >= 0.0) || !(k_min < k_max) || !(step > 0.0))
        throw std::domain_error("find_real_zeros: invalid window");
    std::vector<ZeroBracket> out;
    const long cells = static_cast<long>(std::ceil((k_max - k_min) / step));
    double prev_k = k_min;
    double prev_f = scaled_ft(prev_k, quad_tol);
    bool last_cell_had_change = false;
    for (long i = 1; i <= cells; ++i) {
        const double k = std::min(k_min + static_cast<double>(i) * step, k_max);
        const double fk = scaled_ft(k, quad_tol);
        if (prev_f * fk < 0.0) {
            if (last_cell_had_change)
                std::fprintf(stderr,
                             "find_real_zeros: warning: adjacent sign changes "
                             "near k = %.6f; step %.3g may be too coarse\n",
                             k, step);
            ZeroBracket zb;
            zb.k_lo = prev_k;
            zb.k_hi = k;
            zb.f_lo = prev_f;
            zb.f_hi = fk;
            double lo = prev_k, hi = k, flo = prev_f;
            for (int it = 0; it < 200 && hi - lo > tol; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = scaled_ft(mid, quad_tol);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zb.root = 0.5 * (lo + hi);
            zb.residual = std::fabs(scaled_ft(zb.root, quad_tol));
            out.push_back(zb);
            last_cell_had_change = true;
        } else {
            last_cell_had_change = false;
        }
        prev_k = k;
        prev_f = fk;
    }
    return out;
}

// Transform evaluation at the wavenumber the theorem associates with a
// candidate zeta zero x + iy, with the residual normalized by neighboring
// scaled magnitudes.
struct ZetaZeroMapResult {
    std::complex<double> k;
    std::complex<double> transform_value;
    double scaled_residual = 0.0;
    double neighbor_scale = 0.0;
    bool pass = false;
};

inline ZetaZeroMapResult verify_zeta_zero_map(double x, double y, double tol = 1e-10,
                                              double threshold = 1e-3) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("verify_zeta_zero_map: x must lie in (0, 1)");
    ZetaZeroMapResult r;
    const double kr = 2.0 * y;
    const double ki = 1.0 - 2.0 * x;
    r.k = {kr, ki};
    r.transform_value = phi_ft(StripPoint(kr, ki), tol);
    r.scaled_residual = std::abs(r.transform_value) * transform_scaling(kr);

    const double off = 1.25;
    const double n1 =
        std::abs(phi_ft(StripPoint(kr - off, ki), tol)) * transform_scaling(kr - off);
    const double n2 =
        std::abs(phi_ft(StripPoint(kr + off, ki), tol)) * transform_scaling(kr + off);
    r.neighbor_scale = 0.5 * (n1 + n2);
    r.pass = r.scaled_residual <= threshold * r.neighbor_scale;
    return r;
}

} // namespace sphi
