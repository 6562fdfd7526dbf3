#include "motion/annotate.hpp"

#include <string>

namespace motion {

void paint_mask(RgbImage& image, const MotionMask& mask, Color c) {
    require_same_shape(image.r, mask, "paint_mask");
    const auto on = (mask != std::uint8_t(0));
    image.r = on.select(c.r, image.r);
    image.g = on.select(c.g, image.g);
    image.b = on.select(c.b, image.b);
}

void paint_blob_boxes(RgbImage& image, const std::vector<Blob>& blobs, Color c) {
    const auto w = image.width();
    const auto h = image.height();
    for (const Blob& blob : blobs) {
        const BoundingBox& box = blob.bbox;
        if (box.x_min < 0 || box.y_min < 0 || box.x_max >= w || box.y_max >= h ||
            box.x_min > box.x_max || box.y_min > box.y_max) {
            throw std::invalid_argument(
                "paint_blob_boxes: bbox (" + std::to_string(box.x_min) + "," +
                std::to_string(box.y_min) + "," + std::to_string(box.x_max) + "," +
                std::to_string(box.y_max) + ") out of bounds for " + std::to_string(w) + "x" +
                std::to_string(h));
        }
        for (int x = box.x_min; x <= box.x_max; ++x) {
            image.r(box.y_min, x) = c.r;
            image.g(box.y_min, x) = c.g;
            image.b(box.y_min, x) = c.b;
            image.r(box.y_max, x) = c.r;
            image.g(box.y_max, x) = c.g;
            image.b(box.y_max, x) = c.b;
        }
        for (int y = box.y_min; y <= box.y_max; ++y) {
            image.r(y, box.x_min) = c.r;
            image.g(y, box.x_min) = c.g;
            image.b(y, box.x_min) = c.b;
            image.r(y, box.x_max) = c.r;
            image.g(y, box.x_max) = c.g;
            image.b(y, box.x_max) = c.b;
        }
    }
}

RgbImage highlight_motion_area(const Frame& base, const MotionMask& mask, Color c) {
    require_same_shape(base, mask, "highlight_motion_area");
    RgbImage out = replicate_gray(base);
    paint_mask(out, mask, c);
    return out;
}

MotionMask extract_border(const MotionMask& mask, Connectivity connectivity) {
    const Eigen::Index h = mask.rows();
    const Eigen::Index w = mask.cols();
    MotionMask out = MotionMask::Zero(h, w);

    static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int n = connectivity == Connectivity::four ? 4 : 8;

    for (Eigen::Index y = 0; y < h; ++y) {
        for (Eigen::Index x = 0; x < w; ++x) {
            if (mask(y, x) == 0) continue;
            bool border = false;
            for (int k = 0; k < n && !border; ++k) {
                const Eigen::Index nx = x + dx8[k];
                const Eigen::Index ny = y + dy8[k];
                border = nx < 0 || ny < 0 || nx >= w || ny >= h || mask(ny, nx) == 0;
            }
            if (border) out(y, x) = 1;
        }
    }
    return out;
}

RgbImage highlight_motion_border(const Frame& base, const MotionMask& mask, Color c,
                                 Connectivity connectivity) {
    require_same_shape(base, mask, "highlight_motion_border");
    return highlight_motion_area(base, extract_border(mask, connectivity), c);
}

GridMap grid_motion(const MotionMask& mask, int rows, int cols) {
    const Eigen::Index h = mask.rows();
    const Eigen::Index w = mask.cols();
    if (rows < 1 || cols < 1 || rows > h || cols > w) {
        throw std::invalid_argument("grid_motion: grid " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " invalid for " + std::to_string(w) +
                                    "x" + std::to_string(h) + " mask");
    }

    GridMap grid;
    grid.rows = rows;
    grid.cols = cols;
    grid.counts.reserve(static_cast<std::size_t>(rows) * cols);
    grid.levels.reserve(static_cast<std::size_t>(rows) * cols);

    for (int i = 0; i < rows; ++i) {
        const Eigen::Index y0 = static_cast<Eigen::Index>(i) * h / rows;
        const Eigen::Index y1 = static_cast<Eigen::Index>(i + 1) * h / rows;
        for (int j = 0; j < cols; ++j) {
            const Eigen::Index x0 = static_cast<Eigen::Index>(j) * w / cols;
            const Eigen::Index x1 = static_cast<Eigen::Index>(j + 1) * w / cols;
            const auto cell = mask.block(y0, x0, y1 - y0, x1 - x0);
            const std::int64_t count = (cell != std::uint8_t(0)).count();
            grid.counts.push_back(count);
            grid.levels.push_back(static_cast<double>(count) /
                                  static_cast<double>((y1 - y0) * (x1 - x0)));
        }
    }
    return grid;
}

RgbImage draw_blob_boxes(const Frame& base, const std::vector<Blob>& blobs, Color c) {
    RgbImage out = replicate_gray(base);
    paint_blob_boxes(out, blobs, c);
    return out;
}

}  // namespace motion
