#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "sphi/sfunc.hpp"

using namespace sphi;
using Catch::Matchers::WithinAbs;

TEST_CASE("closed-form spot values") {
    const double s1 = 0.5 * (kLogTwoPi - kEulerGamma - 1.0);
    const double s2 = 0.5 * (std::log(4.0 * kPi) - 1.0 - kEulerGamma);
    const double s3 = 0.5 * (std::log(6.0 * kPi) - 1.0 - kEulerGamma) +
                      kPi / (6.0 * std::sqrt(3.0));
    CHECK_THAT(s_eval(1.0).value, WithinAbs(s1, 1e-13));
    CHECK_THAT(s_eval(2.0).value, WithinAbs(s2, 1e-13));
    CHECK_THAT(s_eval(3.0).value, WithinAbs(s3, 1e-13));
    CHECK_THAT(s_eval(1.0).value, WithinAbs(0.1303307007, 1e-10));
}

TEST_CASE("route pairwise agreement") {
    struct Probe { double a; long n, m; };
    const std::vector<Probe> probes = {{0.1, 1, 10}, {0.25, 1, 4},
                                       {1.0 / 3.0, 1, 3}, {0.5, 1, 2},
                                       {2.0 / 3.0, 2, 3}, {0.9, 9, 10},
                                       {1.0, 1, 1}};
    for (const auto& p : probes) {
        CAPTURE(p.a);
        std::vector<EvalResult> rs = {s_series(p.a), s_integral_a(p.a),
                                      s_integral_b(p.a), s_divisor(p.a),
                                      s_rational(Rational{p.n, p.m})};
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = i + 1; j < rs.size(); ++j) {
                CAPTURE(route_name(rs[i].route), route_name(rs[j].route));
                CHECK(std::fabs(rs[i].value - rs[j].value) <= 1e-11);
            }
        // reported error bars are honest at these points
        for (const auto& r : rs)
            CHECK(std::fabs(r.value - rs[0].value) <=
                  r.abs_err + rs[0].abs_err + 1e-12);
    }
}

TEST_CASE("functional equation residual") {
    for (int i = 0; i < 25; ++i) {
        const double a = std::exp(std::log(0.05) +
                                  (std::log(20.0) - std::log(0.05)) * i / 24.0);
        CAPTURE(a);
        const double rhs = functional_map(a, s_eval(1.0 / a).value);
        CHECK(std::fabs(s_eval(a).value - rhs) <= 1e-10);
    }
}

TEST_CASE("positivity and monotonic growth") {
    double prev = 0.0;
    for (double a = 0.05; a <= 3.0; a += 0.05) {
        const double v = s_eval(a).value;
        CHECK(v > 0.0);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("small-a quadratic law") {
    for (double a : {0.005, 0.01, 0.02}) {
        const double ratio = s_eval(a).value * 72.0 / (kPi * kPi * a * a);
        CHECK_THAT(ratio, WithinAbs(1.0, 0.01));
    }
    CHECK(s_eval(0.0).value == 0.0);
}

TEST_CASE("large-a growth law") {
    // S(a) = ((a+1)/2) ln a + c (1-a) + a S(1/a); the last term is O(1/a)
    for (double a : {50.0, 200.0}) {
        const double lead = 0.5 * (a + 1.0) * std::log(a) +
                            kHalfLog2PiMinusGamma * (1.0 - a);
        CHECK_THAT(s_eval(a).value - lead, WithinAbs(kPi * kPi / (72.0 * a), 1e-4));
    }
}

TEST_CASE("derivative at 1 with Richardson consistency") {
    CHECK_THAT(s_derivative(1.0), WithinAbs(0.25, 1e-8));
    const double d1 = s_derivative(1.0, 2e-3);
    const double d2 = s_derivative(1.0, 1e-3);
    CHECK(std::fabs(d2 - 0.25) <= std::fabs(d1 - 0.25) + 1e-12);
    // derivative of the functional equation at a = 1 gives the same slope
    const double h = 1e-4;
    const double fd = (s_eval(1.0 + h).value - s_eval(1.0 - h).value) / (2.0 * h);
    CHECK_THAT(fd, WithinAbs(0.25, 1e-6));
}

TEST_CASE("dispatcher and domain errors") {
    CHECK(s_eval(2.5).route == Route::FunctionalMap);
    CHECK(s_eval(0.5).route == Route::Series);
    CHECK(s_eval(0.5, 1e-12, Route::IntegralB).route == Route::IntegralB);
    CHECK_THROWS_AS(s_eval(-1.0), std::domain_error);
    CHECK_THROWS_AS(s_divisor(5.0), std::domain_error);
    CHECK_THROWS_AS(s_rational(Rational{0, 1}), std::domain_error);
    CHECK_THROWS_AS(s_derivative(1e-4), std::domain_error);
}

TEST_CASE("rational closed form reduces") {
    const Rational q{4, 8};
    CHECK(q.n == 1);
    CHECK(q.m == 2);
    CHECK_THAT(s_rational(q).value, WithinAbs(s_series(0.5).value, 1e-12));
}
