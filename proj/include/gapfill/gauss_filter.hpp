#pragma once

#include "gapfill/image.hpp"
#include "gapfill/local_stats.hpp"

namespace gapfill {

struct BlurParams {
    int radius = 15;
    bool normalize = true;
    double epsilon = 0.25;  // ridge added to degenerate covariances
};

// Gaussian-weighted sum of the neighborhood of `center` under the given
// covariance.  With normalize the result is the kernel-weighted average of
// the in-image samples (constants pass through exactly, borders are not
// darkened); without it the raw weighted sum over the zero-extended image,
// clamped to [0, 1].
double convolve_at(const GrayImage& img, PixelCoord center, const CovMatrix2& sigma,
                   const NeighborhoodMask& mask, bool normalize);

// Per-pixel anisotropic blur: each output pixel is convolved under the
// covariance of its own excess-brightness weights, so smoothing follows the
// local structure orientation.  threads <= 0 uses all hardware threads; the
// result does not depend on the thread count.
GrayImage local_gaussian_blur(const GrayImage& img, const BlurParams& params,
                              int threads = 0);

// Isotropic reference blur: fixed covariance s*I at every pixel, normalized.
GrayImage classical_gaussian_blur(const GrayImage& img, double s, int radius,
                                  int threads = 0);

}  // namespace gapfill
