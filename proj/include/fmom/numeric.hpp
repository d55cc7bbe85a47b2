#pragma once

#include <cmath>

namespace fmom {

/// Neumaier-compensated accumulator. Long event sums keep full double
/// precision regardless of magnitude spread.
class compensated_sum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// x^n by repeated multiplication; avoids libm pow so the operation sequence
/// is fixed.
inline double ipow(double x, unsigned n) noexcept {
    double r = 1.0;
    while (n-- > 0) r *= x;
    return r;
}

}  // namespace fmom
