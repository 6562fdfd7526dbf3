#pragma once

#include "motion/image.hpp"

#include <optional>
#include <span>
#include <vector>

namespace motion {

// Pixel-level confusion counts of a predicted mask against ground truth.
struct Confusion {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + fp + tn + fn; }

    Confusion& operator+=(const Confusion& other) {
        tp += other.tp;
        fp += other.fp;
        tn += other.tn;
        fn += other.fn;
        return *this;
    }

    friend bool operator==(const Confusion&, const Confusion&) = default;
};

Confusion confusion(const MotionMask& pred, const MotionMask& truth);

// tp / (tp + fp); empty when there are no predicted positives.
std::optional<double> precision(const Confusion& c);

// (tp + tn) / total; empty when no pixels were evaluated.
std::optional<double> accuracy(const Confusion& c);

struct EvalReport {
    std::vector<Confusion> per_frame;
    Confusion aggregate;
    std::optional<double> precision;  // micro-averaged
    std::optional<double> accuracy;   // micro-averaged
    std::int64_t frames_evaluated = 0;
};

// Streaming micro-average: confusions are summed across frames first, then
// the ratios are taken once at the end.
class SequenceEvaluator {
public:
    void add(const MotionMask& pred, const MotionMask& truth);
    EvalReport finish() const;

private:
    std::vector<Confusion> per_frame_;
    Confusion aggregate_;
};

EvalReport evaluate_sequence(std::span<const MotionMask> pred, std::span<const MotionMask> truth);

}  // namespace motion
