#pragma once

#include <cmath>
#include <span>

namespace swnav {

/// Neumaier-compensated sum; used wherever a probability vector is
/// normalized or checked so that n ~ 1e6 entries still sum to 1 within 1e-12.
inline double compensated_sum(std::span<const double> values)
{
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

} // namespace swnav
