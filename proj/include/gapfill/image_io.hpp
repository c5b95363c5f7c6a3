#pragma once

#include <string>

#include "gapfill/image.hpp"

namespace gapfill {

// Load a grayscale image, dispatching on file content (PGM "P5" magic or PNG
// signature).  Bytes map to intensities as v/255.  Color PNGs collapse to the
// channel average; 16-bit files and PGM maxval != 255 are rejected.
GrayImage read_image(const std::string& path);

// Read a grayscale file and binarize it: intensity > 0.5 becomes foreground.
// Round-trips images written from a BinaryImage exactly.
BinaryImage read_binary_image(const std::string& path);

// Write grayscale output; format chosen by extension (.png for PNG, anything
// else is raw 8-bit PGM).  Intensities quantize round-half-up to bytes.
void write_image(const std::string& path, const GrayImage& img);

// Binary overload: foreground writes as 255, background as 0.
void write_image(const std::string& path, const BinaryImage& img);

}  // namespace gapfill
