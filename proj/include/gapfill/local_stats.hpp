#pragma once

#include <cstdint>
#include <vector>

#include "gapfill/image.hpp"

namespace gapfill {

// Offsets of the disc {(i,j) : i^2 + j^2 <= r^2}, stored so that each
// transpose partner (j,i) immediately follows (i,j); offsets on the i == j
// diagonal stand alone.  sum_over() exploits this layout: swapping the roles
// of i and j only swaps the two addends inside a pair, which IEEE addition
// keeps bit-exact, so statistics computed here are exactly transpose
// equivariant.
struct NeighborhoodMask {
    int radius = 0;
    std::vector<PixelCoord> offsets;
    std::vector<uint8_t> paired;  // paired[k]: offsets[k] and offsets[k+1] are partners

    size_t size() const { return offsets.size(); }

    template <typename TermFn>
    double sum_over(TermFn&& term) const {
        double acc = 0.0;
        for (size_t k = 0; k < offsets.size();) {
            if (paired[k]) {
                acc += term(offsets[k]) + term(offsets[k + 1]);
                k += 2;
            } else {
                acc += term(offsets[k]);
                k += 1;
            }
        }
        return acc;
    }
};

// Disc mask of the given radius (r >= 1).
NeighborhoodMask make_mask(int radius);

// Symmetric 2x2 second-moment matrix [[sxx, sxy], [sxy, syy]].
struct CovMatrix2 {
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;

    double det() const { return sxx * syy - sxy * sxy; }
    bool degenerate() const;

    // Identity when well-conditioned; Sigma + epsilon*I when degenerate.
    CovMatrix2 regularized(double epsilon = 0.25) const;
};

struct EigenPair {
    double lambda1 = 0.0;  // larger eigenvalue
    double lambda2 = 0.0;
    double v1x = 1.0, v1y = 0.0;  // unit eigenvector for lambda1
    double v2x = 0.0, v2y = 1.0;
};

// Excess-brightness weights max(0, J(p+o) - mean of J over the mask),
// one entry per mask offset, in mask order.  Out-of-bounds samples read 0.
std::vector<double> local_weights(const GrayImage& img, PixelCoord center,
                                  const NeighborhoodMask& mask);

// Second moments of the mask offsets under local_weights, taken about the
// mask center (not the weight centroid), normalized by total weight.
// All weights zero yields the zero matrix.
CovMatrix2 weighted_covariance(const GrayImage& img, PixelCoord center,
                               const NeighborhoodMask& mask);

// x^T Sigma^{-1} x for x = (x, y).  Requires det(Sigma) > 1e-12.
double mahalanobis_sq(const CovMatrix2& sigma, double x, double y);

// Bivariate centered Gaussian density exp(-mahal/2) / (2*pi*sqrt(det)).
double gaussian_density(const CovMatrix2& sigma, double x, double y);

// Closed-form eigendecomposition of a PSD 2x2 symmetric matrix.  Eigenvalues
// sorted descending, tiny negatives clamped to zero; eigenvectors unit length,
// mutually orthogonal, first nonzero component positive.
EigenPair eigen_sym2(const CovMatrix2& sigma);

// Minor-to-major half-axis ratio sqrt(lambda2/lambda1); 1.0 when lambda1 = 0.
double axis_ratio(const EigenPair& eig);

}  // namespace gapfill
