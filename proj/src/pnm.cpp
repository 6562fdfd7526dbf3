#include "motion/pnm.hpp"

#include <cstring>
#include <fstream>

namespace motion {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Cursor {
public:
    explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }
    std::uint8_t peek() const { return bytes_[pos_]; }
    std::uint8_t take() { return bytes_[pos_++]; }

    void expect_magic(char second) {
        if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] != second) {
            throw PnmParseError(0, std::string("expected magic \"P") + second + "\"");
        }
        pos_ = 2;
    }

    // Skips whitespace and '#' comment lines between header tokens.
    void skip_separators() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                take();
            } else if (peek() == '#') {
                while (!eof() && take() != '\n') {
                }
            } else {
                return;
            }
        }
    }

    unsigned read_number(const char* what) {
        skip_separators();
        if (eof()) throw PnmParseError(offset(), std::string("missing ") + what);
        if (peek() < '0' || peek() > '9') {
            throw PnmParseError(offset(), std::string("non-numeric ") + what);
        }
        unsigned value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (take() - '0');
            if (value > 1000000u) throw PnmParseError(offset(), std::string(what) + " too large");
        }
        return value;
    }

    // The single whitespace byte that separates the maxval from the raster.
    void expect_raster_separator() {
        if (eof() || !is_pnm_space(peek())) {
            throw PnmParseError(offset(), "expected whitespace before raster");
        }
        take();
    }

    std::span<const std::uint8_t> raster(std::size_t count) {
        if (bytes_.size() - pos_ < count) {
            throw PnmParseError(bytes_.size(),
                                "truncated raster (need " + std::to_string(count) + " bytes, have " +
                                    std::to_string(bytes_.size() - pos_) + ")");
        }
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

struct Header {
    Eigen::Index width = 0;
    Eigen::Index height = 0;
};

Header read_header(Cursor& cur, char magic) {
    cur.expect_magic(magic);
    const unsigned w = cur.read_number("width");
    const unsigned h = cur.read_number("height");
    if (w == 0 || h == 0) {
        throw PnmParseError(cur.offset(), "zero width or height");
    }
    cur.skip_separators();
    const std::size_t maxval_offset = cur.offset();
    const unsigned maxval = cur.read_number("maxval");
    if (maxval != 255) {
        throw PnmParseError(maxval_offset, "maxval must be 255, got " + std::to_string(maxval));
    }
    cur.expect_raster_separator();
    return Header{static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(h)};
}

void append_header(std::vector<std::uint8_t>& out, char magic, Eigen::Index w, Eigen::Index h) {
    const std::string header = std::string("P") + magic + "\n" + std::to_string(w) + " " +
                               std::to_string(h) + "\n255\n";
    out.insert(out.end(), header.begin(), header.end());
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("read failed: " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

Frame read_pgm(std::span<const std::uint8_t> bytes) {
    Cursor cur(bytes);
    const Header hdr = read_header(cur, '5');
    const auto raster = cur.raster(static_cast<std::size_t>(hdr.width) * hdr.height);
    return Eigen::Map<const Frame>(raster.data(), hdr.height, hdr.width);
}

RgbImage read_ppm(std::span<const std::uint8_t> bytes) {
    Cursor cur(bytes);
    const Header hdr = read_header(cur, '6');
    const auto raster = cur.raster(3 * static_cast<std::size_t>(hdr.width) * hdr.height);
    RgbImage rgb{Frame(hdr.height, hdr.width), Frame(hdr.height, hdr.width),
                 Frame(hdr.height, hdr.width)};
    for (Eigen::Index i = 0; i < rgb.r.size(); ++i) {
        rgb.r.data()[i] = raster[3 * i];
        rgb.g.data()[i] = raster[3 * i + 1];
        rgb.b.data()[i] = raster[3 * i + 2];
    }
    return rgb;
}

std::vector<std::uint8_t> write_pgm(const Frame& frame) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(frame.size()) + 32);
    append_header(out, '5', frame.cols(), frame.rows());
    out.insert(out.end(), frame.data(), frame.data() + frame.size());
    return out;
}

std::vector<std::uint8_t> write_ppm(const RgbImage& rgb) {
    require_same_shape(rgb.r, rgb.g, "write_ppm");
    require_same_shape(rgb.r, rgb.b, "write_ppm");
    std::vector<std::uint8_t> out;
    out.reserve(3 * static_cast<std::size_t>(rgb.r.size()) + 32);
    append_header(out, '6', rgb.width(), rgb.height());
    for (Eigen::Index i = 0; i < rgb.r.size(); ++i) {
        out.push_back(rgb.r.data()[i]);
        out.push_back(rgb.g.data()[i]);
        out.push_back(rgb.b.data()[i]);
    }
    return out;
}

Frame load_pgm(const std::filesystem::path& path) {
    try {
        return read_pgm(read_file(path));
    } catch (const PnmParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

RgbImage load_ppm(const std::filesystem::path& path) {
    try {
        return read_ppm(read_file(path));
    } catch (const PnmParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void save_pgm(const std::filesystem::path& path, const Frame& frame) {
    write_file(path, write_pgm(frame));
}

void save_ppm(const std::filesystem::path& path, const RgbImage& rgb) {
    write_file(path, write_ppm(rgb));
}

MotionMask mask_from_frame(const Frame& frame) {
    MotionMask mask(frame.rows(), frame.cols());
    for (Eigen::Index i = 0; i < frame.size(); ++i) {
        const std::uint8_t v = frame.data()[i];
        if (v != 0 && v != 255) {
            throw std::runtime_error("mask pixel " + std::to_string(i) + " has value " +
                                     std::to_string(v) + " (expected 0 or 255)");
        }
        mask.data()[i] = v == 255 ? 1 : 0;
    }
    return mask;
}

Frame mask_to_frame(const MotionMask& mask) {
    return (mask != std::uint8_t(0)).select(std::uint8_t(255), MotionMask::Zero(mask.rows(), mask.cols()));
}

MotionMask load_mask(const std::filesystem::path& path) {
    const Frame frame = load_pgm(path);
    try {
        return mask_from_frame(frame);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void save_mask(const std::filesystem::path& path, const MotionMask& mask) {
    save_pgm(path, mask_to_frame(mask));
}

}  // namespace motion
