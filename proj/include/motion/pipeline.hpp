#pragma once

#include "motion/annotate.hpp"
#include "motion/detector.hpp"
#include "motion/metrics.hpp"
#include "motion/sequence.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace motion {

// Configuration or input problems detected before any frame is processed.
// The CLI maps these to exit code 2; failures mid-run map to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnnotateModes {
    bool area = false;
    bool border = false;
    bool grid = false;
    bool blobs = false;

    bool any() const { return area || border || grid || blobs; }
    bool any_image() const { return area || border || blobs; }
};

enum class DetectionMethod { background_subtraction, frame_difference };

const char* to_string(DetectionMethod method);

struct PipelineConfig {
    DetectionMethod method = DetectionMethod::background_subtraction;
    DetectorConfig detector{};
    AnnotateModes modes{};
    int grid_rows = 8;
    int grid_cols = 8;
    Color highlight_color{255, 0, 0};
    Connectivity border_connectivity = Connectivity::four;

    std::filesystem::path input;       // frame directory or manifest file
    std::filesystem::path output_dir;  // needed for image annotations / masks
    std::filesystem::path report_path;
    std::filesystem::path truth_dir;         // optional ground-truth masks
    std::filesystem::path background_path;   // optional explicit reference frame
    int background_frames = 1;               // else: mean of the first N inputs
    bool save_masks = false;
};

struct PipelineResult {
    int frames_processed = 0;
    double detect_seconds = 0.0;  // detection + denoise + blob extraction only
    double fps = 0.0;
    std::optional<EvalReport> eval;
    bool complete = true;
    std::string error;  // set when complete is false
};

// Runs detect -> denoise -> annotate over every input frame, appending one
// JSON record per frame to the report. With a truth directory the report
// footer carries micro-averaged metrics.
PipelineResult run_pipeline(const PipelineConfig& config);

// Compares a directory of predicted masks against ground truth; both sides
// are 0/255 PGM files paired in lexicographic order.
EvalReport evaluate_mask_dirs(const std::filesystem::path& pred_dir,
                              const std::filesystem::path& truth_dir);

}  // namespace motion
