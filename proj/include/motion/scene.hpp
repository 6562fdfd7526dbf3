#pragma once

#include "motion/image.hpp"

#include <functional>
#include <vector>

namespace motion {

// splitmix64. The noise stream of a generated scene is defined by this
// generator so identical specs reproduce bit-identical sequences.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct SquareSpec {
    int size = 16;
    std::uint8_t intensity = 200;
    int x0 = 0;  // top-left start position
    int y0 = 0;
    int vx = 1;  // pixels per frame
    int vy = 0;
};

struct NoiseSpec {
    double salt_pepper_prob = 0.0;
    std::uint64_t seed = 1;
};

// A flat background with one moving square, optionally corrupted by
// salt-and-pepper noise. The square's position is clamped so it stays fully
// inside the image; ground truth marks the square's pixels and is never
// affected by noise.
struct SceneSpec {
    int width = 128;
    int height = 128;
    int frame_count = 1;
    std::uint8_t background_level = 64;
    SquareSpec square{};
    NoiseSpec noise{};
};

void validate(const SceneSpec& spec);

struct SceneFrame {
    Frame frame;
    MotionMask truth;
};

// Emits (index, frame, truth) for each frame in order. Noise is drawn one
// splitmix64 sample per pixel in raster order, frames in order, with the
// generator state carried across frames.
void generate_scene(const SceneSpec& spec,
                    const std::function<void(int, const Frame&, const MotionMask&)>& emit);

std::vector<SceneFrame> generate_scene(const SceneSpec& spec);

}  // namespace motion
