#pragma once

#include "motion/blobs.hpp"

#include <vector>

namespace motion {

// Per-cell motion tallies over a rows x cols partition of a mask.
// counts holds raw motion-pixel counts; levels holds count / cell pixel
// area, both row-major by cell.
struct GridMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> counts;
    std::vector<double> levels;
};

// Paint motion pixels of `mask` in color c; untouched pixels keep whatever
// the image already holds.
void paint_mask(RgbImage& image, const MotionMask& mask, Color c);

// Paint the 1-pixel-thick outline of each blob's bounding box; later blobs
// draw over earlier ones. Boxes must lie inside the image.
void paint_blob_boxes(RgbImage& image, const std::vector<Blob>& blobs, Color c);

// Grayscale base with motion pixels replaced by color c.
RgbImage highlight_motion_area(const Frame& base, const MotionMask& mask, Color c);

// Motion pixels with at least one background neighbor; positions outside
// the image count as background.
MotionMask extract_border(const MotionMask& mask,
                          Connectivity connectivity = Connectivity::four);

RgbImage highlight_motion_border(const Frame& base, const MotionMask& mask, Color c,
                                 Connectivity connectivity = Connectivity::four);

// Partitions the mask into rows x cols cells; cell (i,j) spans pixel rows
// [i*H/rows, (i+1)*H/rows) and columns [j*W/cols, (j+1)*W/cols), so the
// cells tile the image exactly.
GridMap grid_motion(const MotionMask& mask, int rows, int cols);

RgbImage draw_blob_boxes(const Frame& base, const std::vector<Blob>& blobs, Color c);

}  // namespace motion
