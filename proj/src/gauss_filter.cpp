#include "gapfill/gauss_filter.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapfill/parallel.hpp"

namespace gapfill {

double convolve_at(const GrayImage& img, PixelCoord center, const CovMatrix2& sigma,
                   const NeighborhoodMask& mask, bool normalize) {
    if (!normalize) {
        const double s = mask.sum_over([&](PixelCoord o) {
            return gaussian_density(sigma, o.x, o.y) * img.at(center.x + o.x, center.y + o.y);
        });
        return std::clamp(s, 0.0, 1.0);
    }
    // Normalized form: a weighted average over the in-image samples.  Kernel
    // mass hanging over the border is dropped from the denominator rather
    // than averaged in as zero, so the border is not darkened.  Anchoring at
    // the center sample makes the deviation terms of a constant image vanish,
    // so constants pass through bit-exactly everywhere.
    const double jc = img.at(center);
    const double dev = mask.sum_over([&](PixelCoord o) {
        const int sx = center.x + o.x, sy = center.y + o.y;
        if (!img.in_bounds(sx, sy)) return 0.0;
        return gaussian_density(sigma, o.x, o.y) * (img.px(sx, sy) - jc);
    });
    const double mass = mask.sum_over([&](PixelCoord o) {
        if (!img.in_bounds(center.x + o.x, center.y + o.y)) return 0.0;
        return gaussian_density(sigma, o.x, o.y);
    });
    return std::clamp(jc + dev / mass, 0.0, 1.0);
}

GrayImage local_gaussian_blur(const GrayImage& img, const BlurParams& params, int threads) {
    if (params.epsilon <= 0.0)
        throw std::invalid_argument("blur epsilon must be positive");
    const NeighborhoodMask mask = make_mask(params.radius);
    GrayImage out(img.width, img.height);
    parallel_for_rows(img.height, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < img.width; ++x) {
                const PixelCoord p{x, y};
                const CovMatrix2 sigma =
                    weighted_covariance(img, p, mask).regularized(params.epsilon);
                out.px(x, y) = convolve_at(img, p, sigma, mask, params.normalize);
            }
        }
    });
    return out;
}

GrayImage classical_gaussian_blur(const GrayImage& img, double s, int radius, int threads) {
    if (s <= 0.0) throw std::invalid_argument("blur scale must be positive");
    const NeighborhoodMask mask = make_mask(radius);
    const CovMatrix2 sigma{s, 0.0, s};
    GrayImage out(img.width, img.height);
    parallel_for_rows(img.height, threads, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y)
            for (int x = 0; x < img.width; ++x)
                out.px(x, y) = convolve_at(img, {x, y}, sigma, mask, true);
    });
    return out;
}

}  // namespace gapfill
