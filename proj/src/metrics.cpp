#include "motion/metrics.hpp"

#include <stdexcept>

namespace motion {

Confusion confusion(const MotionMask& pred, const MotionMask& truth) {
    require_same_shape(pred, truth, "confusion");
    const auto p = (pred != std::uint8_t(0));
    const auto t = (truth != std::uint8_t(0));
    Confusion c;
    c.tp = (p && t).count();
    c.fp = (p && !t).count();
    c.fn = (!p && t).count();
    c.tn = (!p && !t).count();
    return c;
}

std::optional<double> precision(const Confusion& c) {
    if (c.tp + c.fp == 0) return std::nullopt;
    return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

std::optional<double> accuracy(const Confusion& c) {
    if (c.total() == 0) return std::nullopt;
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

void SequenceEvaluator::add(const MotionMask& pred, const MotionMask& truth) {
    const Confusion c = confusion(pred, truth);
    per_frame_.push_back(c);
    aggregate_ += c;
}

EvalReport SequenceEvaluator::finish() const {
    EvalReport report;
    report.per_frame = per_frame_;
    report.aggregate = aggregate_;
    report.precision = motion::precision(aggregate_);
    report.accuracy = motion::accuracy(aggregate_);
    report.frames_evaluated = static_cast<std::int64_t>(per_frame_.size());
    return report;
}

EvalReport evaluate_sequence(std::span<const MotionMask> pred,
                             std::span<const MotionMask> truth) {
    if (pred.size() != truth.size()) {
        throw std::invalid_argument("evaluate_sequence: " + std::to_string(pred.size()) +
                                    " predictions vs " + std::to_string(truth.size()) +
                                    " truth masks");
    }
    SequenceEvaluator eval;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        eval.add(pred[i], truth[i]);
    }
    return eval.finish();
}

}  // namespace motion
