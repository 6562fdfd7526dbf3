#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace motion {

// Dense row-major pixel grid. data() is the raster in top-to-bottom,
// left-to-right scan order, which matches the PGM/PPM byte layout.
template <typename Scalar>
using Image = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Frame = Image<std::uint8_t>;       // grayscale intensities, 0..255
using DiffFrame = Image<std::uint8_t>;   // per-pixel difference magnitudes
using MotionMask = Image<std::uint8_t>;  // 0 = background, 1 = motion
using LabelImage = Image<std::int32_t>;  // component labels, 0 = background

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Color&, const Color&) = default;
};

// Minimum per-pixel difference that must be strictly exceeded for a pixel
// to count as motion.
struct Threshold {
    std::uint8_t value = 25;
};

// Planar color image; serialization interleaves r,g,b per pixel.
struct RgbImage {
    Frame r, g, b;

    Eigen::Index width() const { return r.cols(); }
    Eigen::Index height() const { return r.rows(); }
};

inline RgbImage replicate_gray(const Frame& base) { return RgbImage{base, base, base}; }

template <typename DerivedA, typename DerivedB>
void require_same_shape(const Eigen::DenseBase<DerivedA>& a,
                        const Eigen::DenseBase<DerivedB>& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            std::string(where) + ": size mismatch (" + std::to_string(a.cols()) + "x" +
            std::to_string(a.rows()) + " vs " + std::to_string(b.cols()) + "x" +
            std::to_string(b.rows()) + ")");
    }
}

// Rec. 601 integer luma with round-half-up, used to fold color input into
// the grayscale pipeline. Bit-exact by construction.
inline std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<std::uint8_t>((299 * static_cast<int>(r) + 587 * static_cast<int>(g) +
                                      114 * static_cast<int>(b) + 500) /
                                     1000);
}

inline Frame luminance(const RgbImage& rgb) {
    require_same_shape(rgb.r, rgb.g, "luminance");
    require_same_shape(rgb.r, rgb.b, "luminance");
    Frame out(rgb.r.rows(), rgb.r.cols());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out.data()[i] = luminance(rgb.r.data()[i], rgb.g.data()[i], rgb.b.data()[i]);
    }
    return out;
}

}  // namespace motion
