#pragma once

#include "motion/image.hpp"

namespace motion {

// |a - b| per pixel. Computed in int so 8-bit operands cannot wrap.
template <typename DerivedA, typename DerivedB>
DiffFrame absdiff(const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b) {
    require_same_shape(a, b, "absdiff");
    return (a.derived().template cast<int>() - b.derived().template cast<int>())
        .abs()
        .template cast<std::uint8_t>();
}

// 1 where the difference strictly exceeds t, else 0.
template <typename Derived>
MotionMask threshold(const Eigen::ArrayBase<Derived>& diff, Threshold t) {
    return (diff.derived().template cast<int>() > static_cast<int>(t.value))
        .template cast<std::uint8_t>();
}

template <typename Derived>
std::int64_t motion_pixel_count(const Eigen::ArrayBase<Derived>& mask) {
    using Scalar = typename Derived::Scalar;
    return (mask.derived() != Scalar(0)).count();
}

}  // namespace motion
