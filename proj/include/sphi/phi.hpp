#pragma once

#include <cmath>
#include <stdexcept>

#include "sphi/constants.hpp"
#include "sphi/sfunc.hpp"
#include "sphi/summation.hpp"

namespace sphi {

// Shape constants of the elementary approximants.
struct PhiParams {
    double omega = 1.0 / (1.0 + kLogTwoPi - kEulerGamma);
    double omega1 = (1.0 + (kLogTwoPi - kEulerGamma) / (4.0 * kPi)) /
                    (1.0 + kLogTwoPi - kEulerGamma);
};

inline const PhiParams& phi_params() {
    static const PhiParams p;
    return p;
}

namespace detail {

// 3t / (2 sinh t), even; series below 1e-2 keeps the removable point exact.
inline double three_halves_t_over_sinh(double t) {
    const double at = std::fabs(t);
    if (at < 1e-2) {
        const double t2 = t * t;
        return 1.5 * (1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0);
    }
    return 1.5 * t / std::sinh(t);
}

} // namespace detail

// phi(t) evaluated directly from the definition, without exploiting
// evenness.  The S argument e^{-2t} exceeds 1 for t < 0 and is then reduced
// through the functional equation inside s_eval.
inline double phi_raw(double t, double tol = 1e-12) {
    if (!(std::fabs(t) <= 300.0))
        throw std::domain_error("phi_raw: |t| too large for the unfolded form");
    if (t >= 0.0) {
        const double a = std::exp(-2.0 * t);
        const EvalResult s = s_eval(a, tol * std::exp(-t));
        return (t + kHalfLog2PiMinusGamma) * std::exp(-t) + std::exp(t) * s.value +
               detail::three_halves_t_over_sinh(t);
    }
    // t < 0: the S argument exceeds 1 and the functional-equation reduction
    // produces terms of size |t| e^{|t|} that cancel down to phi ~ 4|t|e^{-|t|}.
    // Binary64 rounding of those terms alone would cost ~|t| e^{|t|} eps, so
    // this branch carries the chain in extended precision.
    const long double tl = t;
    const long double a = std::exp(-2.0L * tl);             // > 1
    const EvalResult s_inv = s_series(static_cast<double>(1.0L / a),
                                      tol * std::exp(t));
    const long double s_big = a * static_cast<long double>(s_inv.value) +
                              kHalfLog2PiMinusGammaL * (1.0L - a) +
                              0.5L * (a + 1.0L) * std::log(a);
    const long double val = (tl + kHalfLog2PiMinusGammaL) * std::exp(-tl) +
                            std::exp(tl) * s_big +
                            static_cast<long double>(detail::three_halves_t_over_sinh(t));
    return static_cast<double>(val);
}

// phi(t), folded to |t| so the S argument stays in [0, 1].
inline double phi(double t, double tol = 1e-12) {
    const double at = std::fabs(t);
    if (at > 700.0) return 0.0;  // phi ~ 4 t e^{-t}; underflow region
    const double a = std::exp(-2.0 * at);
    const EvalResult s = s_series(a, tol * std::exp(-at));
    return (at + kHalfLog2PiMinusGamma) * std::exp(-at) + std::exp(at) * s.value +
           detail::three_halves_t_over_sinh(at);
}

// Elementary approximant t / (sinh(w t) cosh((1-w) t)).
inline double phi0(double t) {
    const double w = phi_params().omega;
    const double at = std::fabs(t);
    if (at < 1e-3) {
        const double w1 = 1.0 - w;
        const double c2 = w * w / 6.0 + w1 * w1 / 2.0;
        const double c4 = 7.0 * w * w * w * w / 360.0 +
                          5.0 * w1 * w1 * w1 * w1 / 24.0 + w * w * w1 * w1 / 12.0;
        const double t2 = t * t;
        return (1.0 + (-c2 + c4 * t2) * t2) / w;
    }
    return t / (std::sinh(w * t) * std::cosh((1.0 - w) * t));
}

// Refined approximant with the arctan-corrected numerator.
inline double phi1(double t) {
    const double w = phi_params().omega1;
    const double c = (kLogTwoPi - kEulerGamma) / (4.0 * kPi);
    const double at = std::fabs(t);
    if (at < 1e-3) {
        const double t2 = t * t;
        const double num = (1.0 + c * 8.0 / 9.0) -
                           c * (512.0 / 729.0) / 3.0 * t2;
        const double w1 = 1.0 - w;
        const double den = w * (1.0 + (w * w / 6.0 + w1 * w1 / 2.0) * t2);
        return num / den;
    }
    return (t + c * std::atan(8.0 * t / 9.0)) /
           (std::sinh(w * t) * std::cosh((1.0 - w) * t));
}

// The classical positive even comparison function
// sum (2 pi n^2 e^{2t} - 3) n^2 e^{5t/2 - pi n^2 e^{2t}}.
inline double g_classic(double t) {
    if (t > 300.0) return 0.0;
    const double E = std::exp(2.0 * t);
    CompensatedSum<double> acc;
    for (long n = 1; n <= 2'000'000; ++n) {
        const double nd = static_cast<double>(n);
        const double q = kPi * nd * nd * E;
        const double ex = 2.5 * t - q;
        if (ex < -746.0) break;
        const double term = (2.0 * q - 3.0) * nd * nd * std::exp(ex);
        acc.add(term);
        if (q > 40.0 && std::fabs(term) < 1e-18 * (std::fabs(acc.value()) + 1e-300))
            break;
    }
    return acc.value();
}

} // namespace sphi
