#pragma once

#include <array>
#include <cstdint>

#include "gapfill/image.hpp"

namespace gapfill {

struct Histogram256 {
    std::array<uint64_t, 256> counts{};
    uint64_t total = 0;
};

enum class ThresholdMethod { Cec, Otsu };

struct ClusterStat {
    double weight = 0.0;    // fraction of pixels in the cluster
    double mean = 0.0;      // intensity units [0, 1]
    double variance = 0.0;  // intensity units squared
};

struct ThresholdModel {
    double threshold = 0.0;  // foreground is v > threshold
    ThresholdMethod method = ThresholdMethod::Cec;
    std::array<ClusterStat, 2> clusters{};  // [below, above]
};

// 256-bin intensity histogram; bins are the on-disk byte values.
Histogram256 histogram(const GrayImage& img);

// Maximize between-class variance over the 255 possible cuts; ties choose the
// smaller cut.  Threshold returned as (t + 0.5)/255.
ThresholdModel otsu_threshold(const Histogram256& hist);

// Minimize the two-cluster cross-entropy cost sum_i p_i * (-ln p_i
// + ln(2*pi*e*var_i)/2) over the same cuts; same tie-break and mapping.
// Variances are floored at one quantization step's variance so single-bin
// clusters cost finitely.
ThresholdModel cec_threshold_1d(const Histogram256& hist);

// Foreground where v > model.threshold.
BinaryImage apply_threshold(const GrayImage& img, const ThresholdModel& model);

}  // namespace gapfill
