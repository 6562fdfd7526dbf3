#include "motion/pipeline.hpp"

#include "motion/pnm.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>

namespace motion {

namespace fs = std::filesystem;
using nlohmann::json;

const char* to_string(DetectionMethod method) {
    return method == DetectionMethod::background_subtraction ? "background_subtraction"
                                                             : "frame_difference";
}

namespace {

Frame load_frame(const fs::path& path) {
    if (path.extension() == ".ppm") return luminance(load_ppm(path));
    return load_pgm(path);
}

std::vector<fs::path> list_masks(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw ConfigError("not a directory: " + dir.string());
    }
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });
    return paths;
}

json metrics_json(const EvalReport& report) {
    json m;
    m["tp"] = report.aggregate.tp;
    m["fp"] = report.aggregate.fp;
    m["tn"] = report.aggregate.tn;
    m["fn"] = report.aggregate.fn;
    m["precision"] = report.precision ? json(*report.precision) : json(nullptr);
    m["accuracy"] = report.accuracy ? json(*report.accuracy) : json(nullptr);
    m["frames_evaluated"] = report.frames_evaluated;
    m["averaging"] = "micro";
    return m;
}

class ReportWriter {
public:
    explicit ReportWriter(const fs::path& path) {
        if (path.empty()) return;
        stream_.emplace(path, std::ios::trunc);
        if (!*stream_) throw ConfigError("cannot open report " + path.string() + " for writing");
    }

    void line(const json& object) {
        if (!stream_) return;
        *stream_ << object.dump() << '\n';
        stream_->flush();
    }

private:
    std::optional<std::ofstream> stream_;
};

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
    if (!config.modes.any() && config.report_path.empty()) {
        throw ConfigError("nothing to produce: select annotation modes or a report path");
    }
    if ((config.modes.any_image() || config.save_masks) && config.output_dir.empty()) {
        throw ConfigError("image annotations or masks requested but no output directory given");
    }
    if (config.background_frames < 1) {
        throw ConfigError("background-frames must be >= 1");
    }
    try {
        validate(config.detector);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    SequenceSource sequence;
    try {
        sequence = SequenceSource::open(config.input);
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }
    if (sequence.empty()) {
        throw ConfigError("no input frames in " + config.input.string());
    }
    const auto& paths = sequence.paths();

    std::vector<fs::path> truth_paths;
    const bool evaluate = !config.truth_dir.empty();
    if (evaluate) {
        truth_paths = list_masks(config.truth_dir);
        if (truth_paths.size() != paths.size()) {
            throw ConfigError("truth mask count (" + std::to_string(truth_paths.size()) +
                              ") does not match frame count (" + std::to_string(paths.size()) +
                              ")");
        }
    }

    // The first frame pins the stream dimensions; failing to read it means
    // the input as a whole is unusable.
    Frame first;
    try {
        first = load_frame(paths[0]);
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }

    if (config.modes.grid &&
        (config.grid_rows < 1 || config.grid_cols < 1 || config.grid_rows > first.rows() ||
         config.grid_cols > first.cols())) {
        throw ConfigError("grid " + std::to_string(config.grid_rows) + "x" +
                          std::to_string(config.grid_cols) + " invalid for " +
                          std::to_string(first.cols()) + "x" + std::to_string(first.rows()) +
                          " frames");
    }

    if (config.modes.any_image() || config.save_masks) {
        std::error_code ec;
        fs::create_directories(config.output_dir, ec);
        if (ec) {
            throw ConfigError("cannot create output directory " + config.output_dir.string() +
                              ": " + ec.message());
        }
    }

    std::optional<BackgroundModel> model;
    std::optional<FrameDiffDetector> frame_diff;
    if (config.method == DetectionMethod::background_subtraction) {
        try {
            if (!config.background_path.empty()) {
                Frame reference = load_pgm(config.background_path);
                require_same_shape(first, reference, "background reference");
                model.emplace(std::move(reference), config.detector);
            } else {
                const std::size_t n =
                    std::min<std::size_t>(static_cast<std::size_t>(config.background_frames),
                                          paths.size());
                std::vector<Frame> initial;
                initial.reserve(n);
                initial.push_back(first);
                for (std::size_t i = 1; i < n; ++i) initial.push_back(load_frame(paths[i]));
                model.emplace(BackgroundModel::from_frames(initial, config.detector));
            }
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    } else {
        frame_diff.emplace(config.detector);
    }

    ReportWriter report(config.report_path);
    SequenceEvaluator evaluator;
    PipelineResult result;

    const auto finish = [&](bool complete, const std::string& error) {
        result.complete = complete;
        result.error = error;
        result.fps = result.detect_seconds > 0.0
                         ? static_cast<double>(result.frames_processed) / result.detect_seconds
                         : 0.0;
        json summary;
        summary["frames"] = result.frames_processed;
        summary["method"] = to_string(config.method);
        summary["timing"] = {{"frames", result.frames_processed},
                             {"seconds", result.detect_seconds},
                             {"fps", result.fps}};
        if (evaluate && complete) {
            result.eval = evaluator.finish();
            summary["metrics"] = metrics_json(*result.eval);
        }
        if (!complete) {
            summary["incomplete"] = true;
            summary["error"] = error;
        }
        report.line(json{{"summary", summary}});
        return result;
    };

    for (std::size_t i = 0; i < paths.size(); ++i) {
        try {
            const Frame frame = i == 0 ? first : load_frame(paths[i]);

            const auto t0 = std::chrono::steady_clock::now();
            MotionMask mask = model ? model->detect(frame) : frame_diff->detect(frame);
            if (model && config.detector.update_alpha > 0.0) model->update(frame);
            mask = denoise(mask, config.detector.min_blob_size, config.detector.connectivity);
            std::vector<Blob> blobs;
            if (config.modes.blobs) {
                blobs = extract_blobs(mask, config.detector.connectivity, 0);
            }
            const auto t1 = std::chrono::steady_clock::now();
            result.detect_seconds += std::chrono::duration<double>(t1 - t0).count();

            const std::string stem = paths[i].stem().string();
            if (config.modes.any_image()) {
                RgbImage annotated = replicate_gray(frame);
                if (config.modes.area) {
                    paint_mask(annotated, mask, config.highlight_color);
                }
                if (config.modes.border) {
                    paint_mask(annotated, extract_border(mask, config.border_connectivity),
                               config.highlight_color);
                }
                if (config.modes.blobs) {
                    paint_blob_boxes(annotated, blobs, config.highlight_color);
                }
                save_ppm(config.output_dir / (stem + ".annotated.ppm"), annotated);
            }
            if (config.save_masks) {
                save_mask(config.output_dir / (stem + ".mask.pgm"), mask);
            }
            if (evaluate) {
                evaluator.add(mask, load_mask(truth_paths[i]));
            }

            json record;
            record["frame"] = static_cast<std::int64_t>(i);
            record["motion_pixels"] = motion_pixel_count(mask);
            if (config.modes.blobs) {
                json list = json::array();
                for (const Blob& blob : blobs) {
                    list.push_back({{"label", blob.label},
                                    {"area", blob.area},
                                    {"bbox", {blob.bbox.x_min, blob.bbox.y_min, blob.bbox.x_max,
                                              blob.bbox.y_max}}});
                }
                record["blobs"] = std::move(list);
            }
            if (config.modes.grid) {
                const GridMap grid = grid_motion(mask, config.grid_rows, config.grid_cols);
                record["grid"] = {{"rows", grid.rows}, {"cols", grid.cols},
                                  {"counts", grid.counts}};
            }
            report.line(record);
            ++result.frames_processed;
        } catch (const std::exception& e) {
            return finish(false, std::string(e.what()) + " (frame " + std::to_string(i) + ")");
        }
    }
    return finish(true, "");
}

EvalReport evaluate_mask_dirs(const fs::path& pred_dir, const fs::path& truth_dir) {
    const std::vector<fs::path> pred = list_masks(pred_dir);
    const std::vector<fs::path> truth = list_masks(truth_dir);
    if (pred.size() != truth.size()) {
        throw ConfigError("mask count mismatch: " + std::to_string(pred.size()) + " predicted vs " +
                          std::to_string(truth.size()) + " truth");
    }
    if (pred.empty()) {
        throw ConfigError("no masks found in " + pred_dir.string());
    }
    SequenceEvaluator evaluator;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        evaluator.add(load_mask(pred[i]), load_mask(truth[i]));
    }
    return evaluator.finish();
}

}  // namespace motion
