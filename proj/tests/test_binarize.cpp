#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gapfill/threshold.hpp"
#include "test_util.hpp"

using namespace gapfill;

namespace {

Histogram256 spikes(std::initializer_list<std::pair<int, uint64_t>> bins) {
    Histogram256 h;
    for (const auto& [bin, count] : bins) {
        h.counts[static_cast<size_t>(bin)] = count;
        h.total += count;
    }
    return h;
}

// Two-component Gaussian mixture on the byte grid, with ground-truth labels.
// Box-Muller on raw mt19937 words, independent of the library's generator.
struct MixtureSample {
    Histogram256 hist;
    std::vector<std::pair<double, int>> labeled;  // (value, component)
};

MixtureSample sample_mixture(double w0, double mu0, double mu1, double sigma, int n,
                             uint32_t seed) {
    std::mt19937 rng(seed);
    constexpr double kInv32 = 1.0 / 4294967296.0;
    MixtureSample out;
    for (int k = 0; k < n; ++k) {
        const double u1 = (static_cast<double>(rng()) + 1.0) * kInv32;
        const double u2 = static_cast<double>(rng()) * kInv32;
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        const int label = static_cast<double>(rng()) * kInv32 < w0 ? 0 : 1;
        double v = (label == 0 ? mu0 : mu1) + sigma * z;
        v = std::min(1.0, std::max(0.0, v));
        out.labeled.push_back({v, label});
        ++out.hist.counts[static_cast<size_t>(quantize_byte(v))];
        ++out.hist.total;
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("binarize");

TEST_CASE("histogram bins by quantized byte") {
    GrayImage img(3, 1);
    img.px(0, 0) = 0.0;
    img.px(1, 0) = 0.5;  // byte 128
    img.px(2, 0) = 1.0;
    const Histogram256 h = histogram(img);
    CHECK(h.total == 3);
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[128] == 1);
    CHECK(h.counts[255] == 1);
}

TEST_CASE("otsu splits two equal spikes at the first separating cut") {
    const Histogram256 h = spikes({{51, 500}, {204, 500}});
    const ThresholdModel m = otsu_threshold(h);
    CHECK(m.threshold == doctest::Approx((51 + 0.5) / 255.0).epsilon(1e-15));
    CHECK(m.method == ThresholdMethod::Otsu);
    CHECK(m.clusters[0].weight == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.clusters[0].mean == doctest::Approx(51.0 / 255.0).epsilon(1e-12));
    CHECK(m.clusters[1].mean == doctest::Approx(204.0 / 255.0).epsilon(1e-12));
    CHECK(m.clusters[0].variance == 0.0);
}

TEST_CASE("cec agrees with otsu on well-separated spikes") {
    const Histogram256 h = spikes({{51, 500}, {204, 500}});
    CHECK(cec_threshold_1d(h).threshold == otsu_threshold(h).threshold);
}

TEST_CASE("otsu on unbalanced spikes still cuts at the lower spike") {
    const Histogram256 h = spikes({{25, 900}, {230, 100}});
    CHECK(otsu_threshold(h).threshold == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("cec shifts its cut toward the smaller cluster") {
    // Same means and spread; only the weights change.  The -p*ln(p) term makes
    // boundary points cheaper to assign to the heavy cluster, so the 90/10 cut
    // sits strictly above the balanced one.
    const MixtureSample even = sample_mixture(0.5, 0.25, 0.75, 0.05, 100000, 7);
    const MixtureSample heavy = sample_mixture(0.9, 0.25, 0.75, 0.05, 100000, 7);
    const double t_even = cec_threshold_1d(even.hist).threshold;
    const double t_heavy = cec_threshold_1d(heavy.hist).threshold;
    CHECK(t_even > 0.35);
    CHECK(t_even < 0.65);
    CHECK(t_heavy > t_even);
}

TEST_CASE("cec separates a balanced mixture almost perfectly") {
    const MixtureSample mix = sample_mixture(0.5, 0.25, 0.75, 0.05, 100000, 7);
    const ThresholdModel m = cec_threshold_1d(mix.hist);
    int correct = 0;
    for (const auto& [v, label] : mix.labeled)
        if ((v > m.threshold) == (label == 1)) ++correct;
    CHECK(static_cast<double>(correct) / mix.labeled.size() >= 0.99);
    CHECK(m.clusters[0].mean == doctest::Approx(0.25).epsilon(0.05));
    CHECK(m.clusters[1].mean == doctest::Approx(0.75).epsilon(0.05));
}

TEST_CASE("thresholds are invariant under histogram scaling") {
    std::mt19937 rng(31);
    Histogram256 h;
    for (int b = 0; b < 256; ++b) {
        h.counts[b] = rng() % 50;
        h.total += h.counts[b];
    }
    Histogram256 h3;
    for (int b = 0; b < 256; ++b) {
        h3.counts[b] = 3 * h.counts[b];
        h3.total += h3.counts[b];
    }
    CHECK(otsu_threshold(h3).threshold == otsu_threshold(h).threshold);
    CHECK(cec_threshold_1d(h3).threshold == cec_threshold_1d(h).threshold);
}

TEST_CASE("zero-variance sides are floored, not fatal") {
    const Histogram256 h = spikes({{100, 50}, {101, 50}});
    const ThresholdModel m = cec_threshold_1d(h);
    CHECK(m.threshold == doctest::Approx((100 + 0.5) / 255.0).epsilon(1e-15));
    // the floor is the quantization step's variance
    CHECK(m.clusters[0].variance ==
          doctest::Approx((1.0 / 12.0) / (255.0 * 255.0)).epsilon(1e-12));
}

TEST_CASE("degenerate histograms are rejected by both methods") {
    const Histogram256 single = spikes({{77, 1000}});
    CHECK_THROWS_WITH_AS(otsu_threshold(single), doctest::Contains("degenerate histogram"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(cec_threshold_1d(single), doctest::Contains("degenerate histogram"),
                         std::runtime_error);
    const Histogram256 empty;
    CHECK_THROWS_AS(otsu_threshold(empty), std::runtime_error);
    const Histogram256 lone = spikes({{12, 1}});
    CHECK_THROWS_AS(cec_threshold_1d(lone), std::runtime_error);
}

TEST_CASE("apply_threshold keeps strictly-above pixels only") {
    GrayImage img(4, 1);
    img.px(0, 0) = 0.5;       // exactly at the threshold: background
    img.px(1, 0) = 0.500001;  // barely above: foreground
    img.px(2, 0) = 0.2;
    img.px(3, 0) = 1.0;
    ThresholdModel m;
    m.threshold = 0.5;
    const BinaryImage out = apply_threshold(img, m);
    CHECK(out.px(0, 0) == 0);
    CHECK(out.px(1, 0) == 1);
    CHECK(out.px(2, 0) == 0);
    CHECK(out.px(3, 0) == 1);

    const GrayImage bright(5, 5, 0.8);
    CHECK(apply_threshold(bright, m).count_white() == 25);
}

TEST_SUITE_END();
