#pragma once

#include <vector>

#include "gapfill/image.hpp"
#include "gapfill/local_stats.hpp"

namespace gapfill {

// Which statistic the elongation gate compares against alpha.
enum class GateForm {
    SqrtRatio,    // sqrt(lambda2 / lambda1), the half-axis ratio
    SquaredRatio  // lambda2 / lambda1
};

// Pixel visit order; dilation gathers its decisions from the input image
// only, so both orders must produce identical output.
enum class Traversal { Forward, Reverse };

struct MorphParams {
    int radius = 25;
    double alpha = 0.25;  // gate threshold; fire when ratio <= alpha
    GateForm gate = GateForm::SqrtRatio;
};

struct StructuralElement {
    std::vector<PixelCoord> offsets;
};

// Offsets within [-r_clip, r_clip]^2 whose squared Mahalanobis distance under
// sigma is below 4, i.e. the ellipse with half-axes 2*sqrt(lambda).  Requires
// a non-degenerate sigma.
StructuralElement ellipse_element(const CovMatrix2& sigma, int r_clip);

// Anisotropy-gated dilation: every foreground pixel whose local covariance is
// elongated enough (axis ratio <= alpha) stamps its own covariance ellipse.
// Round pixels pass through untouched, so blobs keep their shape while broken
// curve fragments grow toward each other.
BinaryImage adaptive_dilate(const BinaryImage& img, const MorphParams& params,
                            int threads = 0, Traversal order = Traversal::Forward);

// Unconditional dilation by the disc of the given radius.
BinaryImage classical_dilate(const BinaryImage& img, int radius);

}  // namespace gapfill
