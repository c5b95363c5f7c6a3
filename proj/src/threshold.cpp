#include "gapfill/threshold.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gapfill {

namespace {

// variance of a 1-bin-wide uniform distribution, the resolution limit
constexpr double kVarFloorB = 1.0 / 12.0;

// Statistics are accumulated as exact integers in bin units (0..255) and only
// divided at the end; scaling every count by the same factor then cancels
// exactly, so thresholds are bit-identical under histogram scaling.
struct PrefixSums {
    // prefix[t] covers bins [0, t); index 256 covers everything
    uint64_t n[257];
    uint64_t s1[257];
    uint64_t s2[257];

    explicit PrefixSums(const Histogram256& h) {
        n[0] = s1[0] = s2[0] = 0;
        for (int b = 0; b < 256; ++b) {
            const uint64_t c = h.counts[b];
            n[b + 1] = n[b] + c;
            s1[b + 1] = s1[b] + c * static_cast<uint64_t>(b);
            s2[b + 1] = s2[b] + c * static_cast<uint64_t>(b) * static_cast<uint64_t>(b);
        }
    }
};

struct SideStat {
    uint64_t n;
    double p;       // fraction of total
    double mean_b;  // bin units
    double var_b;   // bin units squared, not floored
};

SideStat side(const PrefixSums& ps, int lo, int hi, uint64_t total) {
    // bins [lo, hi] inclusive
    const uint64_t n = ps.n[hi + 1] - ps.n[lo];
    SideStat s{n, 0.0, 0.0, 0.0};
    if (n == 0) return s;
    const double nd = static_cast<double>(n);
    const double m = static_cast<double>(ps.s1[hi + 1] - ps.s1[lo]) / nd;
    const double m2 = static_cast<double>(ps.s2[hi + 1] - ps.s2[lo]) / nd;
    s.p = nd / static_cast<double>(total);
    s.mean_b = m;
    s.var_b = m2 - m * m;
    if (s.var_b < 0.0) s.var_b = 0.0;
    return s;
}

void check_splittable(const Histogram256& h) {
    int populated = 0;
    for (uint64_t c : h.counts)
        if (c) ++populated;
    if (h.total < 2 || populated < 2)
        throw std::runtime_error("degenerate histogram: need at least two populated bins");
}

ClusterStat to_intensity(const SideStat& s, double var_b) {
    return ClusterStat{s.p, s.mean_b / 255.0, var_b / (255.0 * 255.0)};
}

ThresholdModel finish(int cut, ThresholdMethod method, const PrefixSums& ps, uint64_t total,
                      bool floor_var) {
    SideStat lo = side(ps, 0, cut, total);
    SideStat hi = side(ps, cut + 1, 255, total);
    const double vlo = floor_var ? std::max(lo.var_b, kVarFloorB) : lo.var_b;
    const double vhi = floor_var ? std::max(hi.var_b, kVarFloorB) : hi.var_b;
    ThresholdModel m;
    m.threshold = (cut + 0.5) / 255.0;
    m.method = method;
    m.clusters[0] = to_intensity(lo, vlo);
    m.clusters[1] = to_intensity(hi, vhi);
    return m;
}

}  // namespace

Histogram256 histogram(const GrayImage& img) {
    Histogram256 h;
    for (double v : img.data) {
        ++h.counts[static_cast<size_t>(quantize_byte(v))];
        ++h.total;
    }
    return h;
}

ThresholdModel otsu_threshold(const Histogram256& hist) {
    check_splittable(hist);
    const PrefixSums ps(hist);
    int best_cut = -1;
    double best = -1.0;
    for (int t = 0; t < 255; ++t) {
        const SideStat lo = side(ps, 0, t, hist.total);
        const SideStat hi = side(ps, t + 1, 255, hist.total);
        if (lo.n == 0 || hi.n == 0) continue;
        const double d = lo.mean_b - hi.mean_b;
        const double score = lo.p * hi.p * d * d;
        if (score > best) {
            best = score;
            best_cut = t;
        }
    }
    return finish(best_cut, ThresholdMethod::Otsu, ps, hist.total, false);
}

ThresholdModel cec_threshold_1d(const Histogram256& hist) {
    check_splittable(hist);
    const PrefixSums ps(hist);
    int best_cut = -1;
    double best = 0.0;
    auto cluster_cost = [](const SideStat& s) {
        const double var = std::max(s.var_b, kVarFloorB);
        return s.p * (-std::log(s.p) +
                      0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * var));
    };
    for (int t = 0; t < 255; ++t) {
        const SideStat lo = side(ps, 0, t, hist.total);
        const SideStat hi = side(ps, t + 1, 255, hist.total);
        if (lo.n == 0 || hi.n == 0) continue;
        const double cost = cluster_cost(lo) + cluster_cost(hi);
        if (best_cut < 0 || cost < best) {
            best = cost;
            best_cut = t;
        }
    }
    return finish(best_cut, ThresholdMethod::Cec, ps, hist.total, true);
}

BinaryImage apply_threshold(const GrayImage& img, const ThresholdModel& model) {
    BinaryImage out(img.width, img.height);
    for (size_t i = 0; i < img.data.size(); ++i)
        out.data[i] = img.data[i] > model.threshold ? 1 : 0;
    return out;
}

}  // namespace gapfill
