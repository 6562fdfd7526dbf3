#pragma once

#include "motion/image.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace motion {

// Decode failure; offset() is the byte position where decoding stopped.
class PnmParseError : public std::runtime_error {
public:
    PnmParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Binary PGM ("P5") and PPM ("P6"), maxval 255 only. Headers may contain
// '#' comment lines; exactly one whitespace byte separates the maxval from
// the raster.
Frame read_pgm(std::span<const std::uint8_t> bytes);
RgbImage read_ppm(std::span<const std::uint8_t> bytes);

// Writers emit "P5\n<w> <h>\n255\n" / "P6\n<w> <h>\n255\n" byte-exactly.
std::vector<std::uint8_t> write_pgm(const Frame& frame);
std::vector<std::uint8_t> write_ppm(const RgbImage& rgb);

Frame load_pgm(const std::filesystem::path& path);
RgbImage load_ppm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Frame& frame);
void save_ppm(const std::filesystem::path& path, const RgbImage& rgb);

// Mask files are PGMs holding exactly 0 (background) and 255 (motion).
MotionMask mask_from_frame(const Frame& frame);
Frame mask_to_frame(const MotionMask& mask);
MotionMask load_mask(const std::filesystem::path& path);
void save_mask(const std::filesystem::path& path, const MotionMask& mask);

}  // namespace motion
