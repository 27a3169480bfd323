#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "sphi/theorem.hpp"

using namespace sphi;
using Catch::Matchers::WithinAbs;
using C = std::complex<double>;

TEST_CASE("F at w = 1 collapses to 1") {
    const C f = F_eval(C(0.7, 2.0), C(1.0, 0.0));
    CHECK(std::abs(f - C(1.0, 0.0)) < 1e-10);
}

TEST_CASE("F matches its small-w asymptotic form") {
    const C z(0.5, 14.1347251417);
    double prev = 1e300;
    for (double e : {1e-2, 1e-3, 1e-4}) {
        const C w = e * std::exp(C(0.0, 0.7));
        const double d = std::abs(F_eval(z, w) - F_asymptotic(z, w));
        CHECK(d < prev);
        prev = d;
        // the remainder is O(|w|): check the scale, not just the trend
        CHECK(d < 20.0 * e);
    }
}

TEST_CASE("F conjugate symmetry and domain guards") {
    const C z(0.5, 14.1347251417);
    const C w = 1e-3 * std::exp(C(0.0, 2.5));
    CHECK(std::abs(std::conj(F_eval(std::conj(z), std::conj(w))) - F_eval(z, w)) <
          1e-9);
    CHECK_THROWS_AS(F_eval(C(-0.5, 1.0), C(1e-3, 0.0)), std::domain_error);
    CHECK_THROWS_AS(F_eval(z, C(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(F_eval(z, -1e-3), std::domain_error);  // arg w = pi
    CHECK_THROWS_AS(F_asymptotic(C(1.5, 0.0), C(1e-3, 0.0)), std::domain_error);
}

TEST_CASE("circle integral is real on the critical line") {
    const auto r = I_eval(1e-2, C(0.5, 10.0), 128, 1e-10, true);
    CHECK(std::fabs(r.value.imag()) < 1e-6 * std::abs(r.value));
    CHECK(r.err < 0.05 * std::abs(r.value));
    CHECK_THROWS_AS(I_eval(1e-6, C(0.5, 10.0)), std::domain_error);
}

TEST_CASE("circle integral equals the h-kernel cosine transform") {
    // finite-eps version of the identity behind the theorem: the angular
    // average and the cosine transform of h converge together as eps -> 0
    const C z(0.5, 10.0);
    const double y = 10.0, eps = 3e-3;
    const C I = I_eval(eps, z, 384, 1e-10, false).value;
    const double T = 18.0, width = kPi / (2.0 * y);
    const long panels = static_cast<long>(std::ceil(T / width));
    const double h = T / static_cast<double>(panels);
    CompensatedSum<double> acc;
    for (long p = 0; p < panels; ++p) {
        double e;
        acc.add(gk15(
            [&](double t) { return 2.0 * std::cos(2.0 * y * t) * h_kernel(t, eps, 1e-9); },
            p * h, (p + 1) * h, e));
    }
    const C rhs = 4.0 * std::sin(kPi * z) / kPi * acc.value();
    CHECK(std::abs(I - rhs) / std::abs(I) < 0.05);
}

TEST_CASE("h-kernel degenerate point and guards") {
    // at t = 0 only the first integral survives
    const double eps = 1e-3;
    double err;
    CompensatedSum<double> acc;
    for (int p = 0; p < 12; ++p) {
        const double lo = std::log(eps) + p * (std::log(50.0) - std::log(eps)) / 12.0;
        const double hi = std::log(eps) + (p + 1) * (std::log(50.0) - std::log(eps)) / 12.0;
        acc.add(gk15(
            [](double v) {
                const double s = std::exp(v);
                const double d = std::expm1(s);
                return s / (d * d);
            },
            lo, hi, err));
    }
    CHECK_THAT(h_kernel(0.0, eps), WithinAbs(acc.value(), 1e-6));
    // at moderate eps the negative psi-edge terms dominate phi
    CHECK(h_kernel(1.0, eps) < 0.0);
    CHECK_THROWS_AS(h_kernel(-1.0, eps), std::domain_error);
    CHECK_THROWS_AS(h_kernel(1.0, 0.5), std::domain_error);
}

TEST_CASE("psi-edge values and branch continuity") {
    // direct quadrature oracle at a moderate point
    const double t = 0.3;
    const double x = std::exp(2.0 * t);
    double err;
    CompensatedSum<double> acc;
    for (int p = 0; p < 10; ++p)
        acc.add(gk15(
            [x](double v) {
                const double s = x * std::exp(v);
                return s > 700.0 ? 0.0 : 1.0 / std::expm1(s);
            },
            p * 0.8, (p + 1) * 0.8, err));
    CHECK_THAT(psi_edge(t), WithinAbs(std::exp(t) * acc.value() - std::exp(-t), 1e-8));

    // both branches around the t = -2 switch against 30-digit references
    CHECK_THAT(psi_edge(-2.0 - 1e-6), WithinAbs(-0.356182891428003, 1e-9));
    CHECK_THAT(psi_edge(-2.0 + 1e-6), WithinAbs(-0.356183333949908, 1e-9));
    CHECK_THAT(psi_edge(0.3), WithinAbs(-0.647255431415388, 1e-9));
    // the calibrated boundary constant has the closed form -(ln 2pi - gamma)/2
    CHECK_THAT(detail::boundary_constant(), WithinAbs(-kHalfLog2PiMinusGamma, 1e-11));
    // deep tail: psi ~ t e^t
    CHECK_THAT(psi_edge(-15.0) / (-15.0 * std::exp(-15.0)), WithinAbs(1.0, 0.05));
    // far right: psi -> -e^{-t}
    CHECK_THAT(psi_edge(5.0), WithinAbs(-std::exp(-5.0), 1e-10));
    CHECK_THROWS_AS(psi_edge(25.0), std::domain_error);
}

TEST_CASE("psi-edge transform at k = 0 equals the plain integral") {
    double err;
    CompensatedSum<double> acc;
    for (int p = -20; p < 20; ++p)
        acc.add(gk15([](double t) { return psi_edge(t, 1e-10); },
                     static_cast<double>(p), static_cast<double>(p + 1), err));
    const C v = psi_edge_ft(StripPoint(0.0), 1e-8);
    CHECK_THAT(v.real(), WithinAbs(acc.value(), 1e-6));
    CHECK(std::fabs(v.imag()) < 1e-8);
}

TEST_CASE("decomposition residual shrinks with eps") {
    const double t = 1.0;
    double prev = 1e300;
    for (double e : {1e-2, 1e-3}) {
        const double model =
            (psi_edge(t + 0.5 * std::log(e)) + psi_edge(-t + 0.5 * std::log(e))) /
                std::sqrt(e) +
            phi(t);
        const double res = std::fabs(h_kernel(t, e) - model);
        CHECK(res < prev);
        prev = res;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("theorem demo argument validation") {
    CHECK_THROWS_AS(theorem_demo(1.2, 10.0, {1e-2, 1e-3}), std::domain_error);
    CHECK_THROWS_AS(theorem_demo(0.5, 10.0, {1e-3, 1e-2}), std::domain_error);
}
