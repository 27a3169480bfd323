#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sphi/summation.hpp"

namespace sphi {

template <class R>
struct QuadResult {
    R value{};
    double err = 0.0;  // absolute error estimate
    long evals = 0;
};

namespace detail {

inline double quad_abs(double v) { return std::fabs(v); }
inline double quad_abs(const std::complex<double>& v) { return std::abs(v); }

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
inline constexpr double kKronrodW[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
inline constexpr double kGaussW[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

} // namespace detail

// One Gauss-Kronrod 7-15 panel on [a, b].
template <class F>
auto gk15(F&& f, double a, double b, double& err)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    R f0 = f(c);
    R kron = detail::kKronrodW[0] * f0;
    R gauss = detail::kGaussW[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * detail::kGK15Nodes[i];
        R fi = f(c + dx) + f(c - dx);
        kron += detail::kKronrodW[i] * fi;
        if (i % 2 == 0) gauss += detail::kGaussW[i / 2] * fi;
    }
    kron *= h;
    gauss *= h;

    // |K15 - G7| is a conservative bound for the Kronrod value's error.
    err = detail::quad_abs(kron - gauss);
    return kron;
}

// Globally adaptive GK15 on a finite interval.  Splits the worst interval
// until the summed error estimate drops below tol.
template <class F>
auto adaptive_gk(F&& f, double a, double b, double tol, int max_intervals = 4000)
    -> QuadResult<decltype(f(0.0))> {
    using R = decltype(f(0.0));
    struct Seg {
        double a, b, err;
        R val;
    };
    QuadResult<R> out;
    double e0;
    R v0 = gk15(f, a, b, e0);
    out.evals += 15;
    std::vector<Seg> segs{{a, b, e0, v0}};

    auto total_err = [&] {
        double e = 0;
        for (const auto& s : segs) e += s.err;
        return e;
    };

    while (total_err() > tol && static_cast<int>(segs.size()) < max_intervals) {
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Seg s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        double e1, e2;
        R v1 = gk15(f, s.a, m, e1);
        R v2 = gk15(f, m, s.b, e2);
        out.evals += 30;
        segs[worst] = {s.a, m, e1, v1};
        segs.push_back({m, s.b, e2, v2});
    }

    CompensatedSum<R> acc;
    for (const auto& s : segs) acc.add(s.val);
    out.value = acc.value();
    out.err = total_err();
    return out;
}

// Double-exponential (exp-sinh) quadrature for integral_0^inf f(x) dx with
// f decaying at least exponentially with decay length ~scale.  Fixed level
// ladder: the step is halved until two successive levels agree to tol/2.
template <class F>
auto exp_sinh(F&& f, double tol, double scale = 1.0, int max_level = 9)
    -> QuadResult<decltype(f(0.0))> {
    using R = decltype(f(0.0));
    const double umax = 3.8;
    const double half_pi = 1.5707963267948966;

    QuadResult<R> out;
    R prev{};
    double h = 0.5;
    for (int level = 0; level <= max_level; ++level, h *= 0.5) {
        CompensatedSum<R> acc;
        long n = 0;
        // On refinement levels only odd multiples of h are new, but we
        // re-sum everything: the node count is small and re-summation keeps
        // the compensated total exact.
        const long steps = std::lround(2.0 * umax / h);
        for (long i = 0; i <= steps; ++i) {
            const double u = -umax + static_cast<double>(i) * h;
            const double sh = half_pi * std::sinh(u);
            if (sh > 700.0) continue;
            const double x = scale * std::exp(sh);
            if (x == 0.0 || !std::isfinite(x)) continue;
            const double w = x * half_pi * std::cosh(u);
            R fx = f(x);
            acc.add(w * fx);
            ++n;
        }
        out.evals += n;
        R cur = h * acc.value();
        if (level > 0) {
            out.err = detail::quad_abs(cur - prev);
            if (out.err <= 0.5 * tol) {
                out.value = cur;
                return out;
            }
        }
        prev = cur;
    }
    out.value = prev;
    return out;
}

} // namespace sphi
