#include "motion/scene.hpp"

#include <algorithm>
#include <stdexcept>

namespace motion {

void validate(const SceneSpec& spec) {
    if (spec.width < 1 || spec.height < 1) {
        throw std::invalid_argument("scene: width and height must be >= 1");
    }
    if (spec.frame_count < 1) {
        throw std::invalid_argument("scene: frame_count must be >= 1");
    }
    if (spec.square.size < 1) {
        throw std::invalid_argument("scene: square size must be >= 1");
    }
    if (spec.square.size > spec.width || spec.square.size > spec.height) {
        throw std::invalid_argument("scene: square " + std::to_string(spec.square.size) +
                                    " does not fit in " + std::to_string(spec.width) + "x" +
                                    std::to_string(spec.height));
    }
    if (!(spec.noise.salt_pepper_prob >= 0.0 && spec.noise.salt_pepper_prob <= 1.0)) {
        throw std::invalid_argument("scene: salt_pepper_prob must be in [0,1]");
    }
}

void generate_scene(const SceneSpec& spec,
                    const std::function<void(int, const Frame&, const MotionMask&)>& emit) {
    validate(spec);

    const int w = spec.width;
    const int h = spec.height;
    const int size = spec.square.size;
    SplitMix64 rng(spec.noise.seed);
    const double p = spec.noise.salt_pepper_prob;

    for (int t = 0; t < spec.frame_count; ++t) {
        const int x = std::clamp(spec.square.x0 + spec.square.vx * t, 0, w - size);
        const int y = std::clamp(spec.square.y0 + spec.square.vy * t, 0, h - size);

        Frame frame = Frame::Constant(h, w, spec.background_level);
        MotionMask truth = MotionMask::Zero(h, w);
        frame.block(y, x, size, size) = spec.square.intensity;
        truth.block(y, x, size, size) = 1;

        if (p > 0.0) {
            std::uint8_t* pixels = frame.data();
            for (Eigen::Index i = 0; i < frame.size(); ++i) {
                const std::uint64_t z = rng.next();
                const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
                if (u < p) pixels[i] = (z & 1) ? 255 : 0;
            }
        }

        emit(t, frame, truth);
    }
}

std::vector<SceneFrame> generate_scene(const SceneSpec& spec) {
    std::vector<SceneFrame> out;
    out.reserve(static_cast<std::size_t>(spec.frame_count));
    generate_scene(spec, [&](int, const Frame& frame, const MotionMask& truth) {
        out.push_back(SceneFrame{frame, truth});
    });
    return out;
}

}  // namespace motion
