#include "gapfill/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapfill {

GrayImage::GrayImage(int w, int h, double fill) {
    if (w < 0 || h < 0)
        throw std::invalid_argument("image dimensions must be non-negative");
    width = w;
    height = h;
    data.assign(static_cast<size_t>(w) * h, fill);
}

BinaryImage::BinaryImage(int w, int h, uint8_t fill) {
    if (w < 0 || h < 0)
        throw std::invalid_argument("image dimensions must be non-negative");
    width = w;
    height = h;
    data.assign(static_cast<size_t>(w) * h, fill ? 1 : 0);
}

size_t BinaryImage::count_white() const {
    return static_cast<size_t>(std::count(data.begin(), data.end(), uint8_t(1)));
}

GrayImage quantize8(const GrayImage& img) {
    GrayImage out = img;
    for (double& v : out.data) v = quantize_byte(v) / 255.0;
    return out;
}

GrayImage overlay(const GrayImage& base, const BinaryImage& mask, double color) {
    if (base.width != mask.width || base.height != mask.height)
        throw std::invalid_argument("overlay: base and mask dimensions differ");
    GrayImage out = base;
    for (size_t i = 0; i < out.data.size(); ++i)
        if (mask.data[i]) out.data[i] = color;
    return out;
}

}  // namespace gapfill
