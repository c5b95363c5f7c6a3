#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapfill/image.hpp"

namespace gapfill {

struct SynthSegment {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 0.0, y1 = 0.0;
    double thickness = 1.0;
};

enum class BackgroundKind { Flat, Speckle };

// Recipe for a synthetic test image: dashed thick segments over a flat or
// speckled background, plus optional additive Gaussian noise.
struct SynthSpec {
    int width = 256;
    int height = 256;
    std::vector<SynthSegment> segments;
    double dash_length = 0.0;  // 0 disables the dash pattern (solid lines)
    double gap_length = 0.0;
    double line_level = 1.0;
    BackgroundKind background = BackgroundKind::Flat;
    double bg_level = 0.0;
    double speckle_density = 0.0;    // fraction of pixels brightened
    double speckle_amplitude = 0.0;  // intensity added to speckled pixels
    uint32_t speckle_seed = 0;
    double noise_sigma = 0.0;
    uint32_t seed = 0;
};

// Render the spec.  Deterministic function of the spec including both seeds;
// segments reaching outside the canvas are clipped silently.
GrayImage synthesize(const SynthSpec& spec);

// Parse "key = value" lines ('#' comments); unknown keys are errors.
// `segment = x0,y0,x1,y1,thickness` may repeat.
SynthSpec parse_synth_spec(const std::string& text);
SynthSpec load_synth_spec(const std::string& path);

}  // namespace gapfill
