#pragma once

#include "motion/blobs.hpp"
#include "motion/pixel_ops.hpp"

#include <optional>
#include <span>
#include <utility>

namespace motion {

struct DetectorConfig {
    Threshold threshold{25};
    double update_alpha = 0.0;       // reference learning rate; 0 = static
    std::int64_t min_blob_size = 8;  // denoise floor, in pixels
    Connectivity connectivity = Connectivity::eight;
};

inline void validate(const DetectorConfig& config) {
    if (!(config.update_alpha >= 0.0 && config.update_alpha <= 1.0)) {
        throw std::invalid_argument("detector config: update_alpha must be in [0,1]");
    }
    if (config.min_blob_size < 0) {
        throw std::invalid_argument("detector config: min_blob_size must be >= 0");
    }
}

// Per-pixel mean of the given frames, round half up.
inline Frame mean_frame(std::span<const Frame> frames) {
    if (frames.empty()) {
        throw std::invalid_argument("mean_frame: empty frame sequence");
    }
    Image<std::int64_t> acc = Image<std::int64_t>::Zero(frames[0].rows(), frames[0].cols());
    for (const Frame& f : frames) {
        require_same_shape(frames[0], f, "mean_frame");
        acc += f.cast<std::int64_t>();
    }
    const auto n = static_cast<std::int64_t>(frames.size());
    return ((acc + n / 2) / n).cast<std::uint8_t>();
}

// Holds the reference frame and compares incoming frames against it.
// detect() never modifies the reference; update() blends the current frame
// in with the configured learning rate.
class BackgroundModel {
public:
    BackgroundModel(Frame reference, DetectorConfig config)
        : reference_(std::move(reference)), config_(config) {
        validate(config_);
    }

    static BackgroundModel from_frames(std::span<const Frame> frames, DetectorConfig config) {
        return BackgroundModel(mean_frame(frames), config);
    }

    MotionMask detect(const Frame& current) const {
        require_same_shape(reference_, current, "background detect");
        return threshold(absdiff(current, reference_), config_.threshold);
    }

    // reference' = round((1 - alpha) * reference + alpha * current), half up.
    void update(const Frame& current) {
        require_same_shape(reference_, current, "background update");
        const double alpha = config_.update_alpha;
        if (alpha == 0.0) return;
        if (alpha == 1.0) {
            reference_ = current;
            return;
        }
        reference_ = ((1.0 - alpha) * reference_.cast<double>() +
                      alpha * current.cast<double>() + 0.5)
                         .floor()
                         .cast<std::uint8_t>();
    }

    const Frame& reference() const { return reference_; }
    const DetectorConfig& config() const { return config_; }

private:
    Frame reference_;
    DetectorConfig config_;
};

// Differences each frame against the one before it. The first frame of a
// stream yields an all-zero mask so every input produces exactly one result.
class FrameDiffDetector {
public:
    explicit FrameDiffDetector(DetectorConfig config) : config_(config) { validate(config_); }

    MotionMask detect(const Frame& current) {
        if (!previous_) {
            previous_ = current;
            return MotionMask::Zero(current.rows(), current.cols());
        }
        require_same_shape(*previous_, current, "frame difference");
        MotionMask mask = threshold(absdiff(current, *previous_), config_.threshold);
        previous_ = current;
        return mask;
    }

    const std::optional<Frame>& previous() const { return previous_; }
    const DetectorConfig& config() const { return config_; }

private:
    std::optional<Frame> previous_;
    DetectorConfig config_;
};

}  // namespace motion
