#pragma once

#include <array>

namespace sphi {

// Fundamental constants used throughout the library.  half_log2pi_minus_gamma
// is the combination (ln(2pi) - gamma)/2 that appears in nearly every closed
// form below.
struct Constants {
    double euler_gamma = 0.57721566490153286060651209008240243;
    double log_two_pi  = 1.83787706640934548356065947281123527;
    double half_log2pi_minus_gamma =
        (1.83787706640934548356065947281123527 -
         0.57721566490153286060651209008240243) / 2.0;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLogTwoPi   = 1.83787706640934548356065947281123527;
inline constexpr double kPi         = 3.14159265358979323846264338327950288;
inline constexpr double kHalfLog2PiMinusGamma = (kLogTwoPi - kEulerGamma) / 2.0;

// Extended-precision copies for the few places where a binary64 chain would
// lose the t e^t cancellation (the unfolded functional-equation path).
inline constexpr long double kEulerGammaL = 0.57721566490153286060651209008240243L;
inline constexpr long double kLogTwoPiL   = 1.83787706640934548356065947281123527L;
inline constexpr long double kHalfLog2PiMinusGammaL =
    (kLogTwoPiL - kEulerGammaL) / 2.0L;

// Even-index Bernoulli numbers B_2 .. B_{2K}.  Used by the digamma
// asymptotic series and the Euler-Maclaurin tail corrections.
struct BernoulliTable {
    static constexpr int size = 15;
    std::array<double, size> b2k = {
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
        8553103.0 / 6.0,
        -23749461029.0 / 870.0,
        8615841276005.0 / 14322.0,
    };
    // B_{2k}; k in [1, size]
    double operator()(int k) const { return b2k[static_cast<size_t>(k - 1)]; }
};

inline const BernoulliTable& bernoulli() {
    static const BernoulliTable table;
    return table;
}

} // namespace sphi
