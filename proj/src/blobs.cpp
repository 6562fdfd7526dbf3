#include "motion/blobs.hpp"

#include <algorithm>
#include <limits>

namespace motion {

namespace {

struct NeighborTable {
    int dx[8];
    int dy[8];
    int count;
};

NeighborTable neighbors(Connectivity connectivity) {
    if (connectivity == Connectivity::four) {
        return NeighborTable{{1, -1, 0, 0}, {0, 0, 1, -1}, 4};
    }
    return NeighborTable{{1, -1, 0, 0, 1, 1, -1, -1}, {0, 0, 1, -1, 1, -1, 1, -1}, 8};
}

}  // namespace

LabelImage label_components(const MotionMask& mask, Connectivity connectivity,
                            std::vector<Blob>* blobs) {
    const Eigen::Index h = mask.rows();
    const Eigen::Index w = mask.cols();
    LabelImage labels = LabelImage::Zero(h, w);
    if (blobs) blobs->clear();

    const NeighborTable nb = neighbors(connectivity);
    std::vector<Eigen::Index> stack;
    int next_label = 0;

    const std::uint8_t* in = mask.data();
    std::int32_t* out = labels.data();

    for (Eigen::Index start = 0; start < w * h; ++start) {
        if (in[start] == 0 || out[start] != 0) continue;
        ++next_label;
        Blob blob;
        blob.label = next_label;
        blob.bbox.x_min = blob.bbox.x_max = static_cast<int>(start % w);
        blob.bbox.y_min = blob.bbox.y_max = static_cast<int>(start / w);

        out[start] = next_label;
        stack.push_back(start);
        while (!stack.empty()) {
            const Eigen::Index p = stack.back();
            stack.pop_back();
            ++blob.area;
            const int px = static_cast<int>(p % w);
            const int py = static_cast<int>(p / w);
            blob.bbox.x_min = std::min(blob.bbox.x_min, px);
            blob.bbox.x_max = std::max(blob.bbox.x_max, px);
            blob.bbox.y_min = std::min(blob.bbox.y_min, py);
            blob.bbox.y_max = std::max(blob.bbox.y_max, py);
            for (int k = 0; k < nb.count; ++k) {
                const int nx = px + nb.dx[k];
                const int ny = py + nb.dy[k];
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                const Eigen::Index q = static_cast<Eigen::Index>(ny) * w + nx;
                if (in[q] != 0 && out[q] == 0) {
                    out[q] = next_label;
                    stack.push_back(q);
                }
            }
        }
        if (blobs) blobs->push_back(blob);
    }
    return labels;
}

std::vector<Blob> extract_blobs(const MotionMask& mask, Connectivity connectivity,
                                std::int64_t min_size) {
    std::vector<Blob> all;
    label_components(mask, connectivity, &all);
    const std::int64_t floor = std::max<std::int64_t>(min_size, 1);

    std::vector<Blob> kept;
    kept.reserve(all.size());
    for (const Blob& blob : all) {
        if (blob.area >= floor) kept.push_back(blob);
    }
    // Survivors are relabeled consecutively; raster order is preserved.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        kept[i].label = static_cast<int>(i) + 1;
    }
    return kept;
}

MotionMask denoise(const MotionMask& mask, std::int64_t min_blob_size,
                   Connectivity connectivity) {
    if (min_blob_size <= 1) return mask;

    std::vector<Blob> blobs;
    const LabelImage labels = label_components(mask, connectivity, &blobs);

    std::vector<char> keep(blobs.size() + 1, 0);
    for (const Blob& blob : blobs) {
        if (blob.area >= min_blob_size) keep[static_cast<std::size_t>(blob.label)] = 1;
    }

    MotionMask out(mask.rows(), mask.cols());
    const std::int32_t* lab = labels.data();
    std::uint8_t* dst = out.data();
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        dst[i] = (lab[i] != 0 && keep[static_cast<std::size_t>(lab[i])]) ? 1 : 0;
    }
    return out;
}

}  // namespace motion
