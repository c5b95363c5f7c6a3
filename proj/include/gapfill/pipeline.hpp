#pragma once

#include <string>

#include "gapfill/image.hpp"
#include "gapfill/morphology.hpp"
#include "gapfill/threshold.hpp"

namespace gapfill {

struct PipelineConfig {
    int blur_radius = 15;
    ThresholdMethod threshold_method = ThresholdMethod::Cec;
    bool invert = false;  // flip the binary: select dark-on-bright structures
    int morph_radius = 25;
    double alpha = 0.25;
    GateForm gate = GateForm::SqrtRatio;
    int morph_iterations = 1;
    int prune_length = 10;
    bool emit_intermediates = false;
    std::string output_dir;
    int threads = 0;  // 0 = all hardware threads
};

// Every stage of one run, in order.  Gray stages are snapped to the 8-bit
// grid, so files written from them read back bit-identically.
struct PipelineResult {
    GrayImage blurred;
    BinaryImage binary;
    BinaryImage morphed;
    BinaryImage thinned;
    BinaryImage pruned;
    BinaryImage skeleton;  // largest component of pruned
    GrayImage overlay;     // skeleton painted white onto the input
};

// blur -> threshold -> adaptive dilation (morph_iterations times) -> thin ->
// prune -> largest component -> overlay.  A constant image after blurring
// (nothing to split) yields an empty skeleton rather than an error.  With
// emit_intermediates and an output_dir, stages are written as
// 01_blur.pgm .. 06_final.pgm.  Errors name the failing stage.
PipelineResult run_pipeline(const GrayImage& input, const PipelineConfig& cfg);

// Flat key=value config ('#' comments).  Unknown keys are errors; omitted
// keys keep their defaults.
PipelineConfig parse_pipeline_config(const std::string& text);
PipelineConfig load_pipeline_config(const std::string& path);

}  // namespace gapfill
