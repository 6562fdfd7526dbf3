#pragma once

#include "motion/image.hpp"

#include <vector>

namespace motion {

// Neighbor relation for connected components: edge-adjacent only, or
// edge- and diagonal-adjacent.
enum class Connectivity { four = 4, eight = 8 };

// Inclusive pixel coordinates.
struct BoundingBox {
    int x_min = 0;
    int y_min = 0;
    int x_max = 0;
    int y_max = 0;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Blob {
    int label = 0;  // 1-based, assigned in raster order of the first pixel
    std::int64_t area = 0;
    BoundingBox bbox{};
};

// Labels connected components of nonzero pixels; background stays 0.
// Components are numbered 1.. in raster order of their first-encountered
// pixel. When blobs is non-null it receives one entry per component.
LabelImage label_components(const MotionMask& mask, Connectivity connectivity,
                            std::vector<Blob>* blobs = nullptr);

// Connected components with area >= max(min_size, 1), relabeled 1.. in
// raster order of their first pixel, ordered by label.
std::vector<Blob> extract_blobs(const MotionMask& mask, Connectivity connectivity,
                                std::int64_t min_size = 0);

// Removes every component smaller than min_blob_size pixels. Values 0 and 1
// for min_blob_size leave the mask unchanged.
MotionMask denoise(const MotionMask& mask, std::int64_t min_blob_size,
                   Connectivity connectivity);

}  // namespace motion
