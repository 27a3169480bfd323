#pragma once

#include <cmath>
#include <complex>

namespace sphi {

// Neumaier-compensated accumulator.  All series loops in the library go
// through this; plain binary64 summation cannot hold the ~1e-12 relative
// accuracy the routes are required to agree to.
template <class T = double>
class CompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if (magnitude(sum_) >= magnitude(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    static double magnitude(double v) { return std::fabs(v); }
    static double magnitude(const std::complex<double>& v) { return std::abs(v); }

    T sum_{};
    T comp_{};
};

} // namespace sphi
