#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gapfill {

struct PixelCoord {
    int x = 0;
    int y = 0;

    bool operator==(const PixelCoord&) const = default;
};

// Row-major grayscale raster with intensities in [0, 1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0);

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    double& px(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const double& px(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    // Zero-extension sampling: out-of-bounds reads are 0.
    double at(int x, int y) const { return in_bounds(x, y) ? px(x, y) : 0.0; }
    double at(PixelCoord p) const { return at(p.x, p.y); }

    size_t size() const { return data.size(); }

    bool operator==(const GrayImage&) const = default;
};

// Row-major binary raster; pixels are 0 (background) or 1 (foreground).
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    BinaryImage() = default;
    BinaryImage(int w, int h, uint8_t fill = 0);

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    uint8_t& px(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t px(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    uint8_t at(int x, int y) const { return in_bounds(x, y) ? px(x, y) : 0; }
    uint8_t at(PixelCoord p) const { return at(p.x, p.y); }

    size_t size() const { return data.size(); }
    size_t count_white() const;

    bool operator==(const BinaryImage&) const = default;
};

// Byte value a gray intensity lands on when written to disk (round half up).
inline int quantize_byte(double v) {
    int b = static_cast<int>(std::floor(v * 255.0 + 0.5));
    if (b < 0) b = 0;
    if (b > 255) b = 255;
    return b;
}

// Snap every intensity to the 8-bit grid (byte/255).  Stages of the pipeline
// pass through this so that images re-read from disk reproduce in-memory
// results exactly.
GrayImage quantize8(const GrayImage& img);

// Paint mask pixels onto a copy of base at the given intensity.
// Dimensions must match.
GrayImage overlay(const GrayImage& base, const BinaryImage& mask, double color);

}  // namespace gapfill
