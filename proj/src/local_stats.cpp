#include "gapfill/local_stats.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gapfill {

namespace {
constexpr double kDetTol = 1e-12;
}

NeighborhoodMask make_mask(int radius) {
    if (radius < 1) throw std::invalid_argument("mask radius must be >= 1");
    NeighborhoodMask m;
    m.radius = radius;
    const int r2 = radius * radius;
    // Emit transpose orbits: representative (i,j) with j >= i, partner (j,i)
    // right after it when distinct.
    for (int i = -radius; i <= radius; ++i) {
        for (int j = i; j <= radius; ++j) {
            if (i * i + j * j > r2) continue;
            if (j == i) {
                m.offsets.push_back({i, j});
                m.paired.push_back(0);
            } else {
                m.offsets.push_back({i, j});
                m.paired.push_back(1);
                m.offsets.push_back({j, i});
                m.paired.push_back(0);
            }
        }
    }
    return m;
}

std::vector<double> local_weights(const GrayImage& img, PixelCoord center,
                                  const NeighborhoodMask& mask) {
    const double card = static_cast<double>(mask.size());
    const double mean =
        mask.sum_over([&](PixelCoord o) { return img.at(center.x + o.x, center.y + o.y); }) /
        card;
    std::vector<double> w(mask.size());
    for (size_t k = 0; k < mask.size(); ++k) {
        const PixelCoord o = mask.offsets[k];
        const double d = img.at(center.x + o.x, center.y + o.y) - mean;
        w[k] = d > 0.0 ? d : 0.0;
    }
    return w;
}

CovMatrix2 weighted_covariance(const GrayImage& img, PixelCoord center,
                               const NeighborhoodMask& mask) {
    const std::vector<double> w = local_weights(img, center, mask);
    // Accumulate transpose-partner pairs together (same discipline as
    // sum_over) so the matrix transposes bit-exactly with the image.
    double total = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t k = 0; k < mask.size();) {
        const PixelCoord a = mask.offsets[k];
        if (mask.paired[k]) {
            const PixelCoord b = mask.offsets[k + 1];
            const double wa = w[k], wb = w[k + 1];
            total += wa + wb;
            sxx += wa * (double(a.x) * a.x) + wb * (double(b.x) * b.x);
            syy += wa * (double(a.y) * a.y) + wb * (double(b.y) * b.y);
            sxy += wa * (double(a.x) * a.y) + wb * (double(b.x) * b.y);
            k += 2;
        } else {
            const double wa = w[k];
            total += wa;
            sxx += wa * (double(a.x) * a.x);
            syy += wa * (double(a.y) * a.y);
            sxy += wa * (double(a.x) * a.y);
            k += 1;
        }
    }
    if (total <= 0.0) return CovMatrix2{};
    return CovMatrix2{sxx / total, sxy / total, syy / total};
}

bool CovMatrix2::degenerate() const { return det() <= kDetTol; }

CovMatrix2 CovMatrix2::regularized(double epsilon) const {
    if (!degenerate()) return *this;
    return CovMatrix2{sxx + epsilon, sxy, syy + epsilon};
}

double mahalanobis_sq(const CovMatrix2& sigma, double x, double y) {
    const double det = sigma.det();
    if (det <= kDetTol) {
        std::ostringstream msg;
        msg << "mahalanobis_sq: singular covariance (det = " << det << ")";
        throw std::runtime_error(msg.str());
    }
    // Grouped so that swapping (x, y) together with (sxx, syy) swaps only
    // commutative operands; the result is bit-identical under transposition.
    const double q = (sigma.syy * (x * x) + sigma.sxx * (y * y)) - 2.0 * (sigma.sxy * (x * y));
    return q / det;
}

double gaussian_density(const CovMatrix2& sigma, double x, double y) {
    const double m = mahalanobis_sq(sigma, x, y);
    return std::exp(-0.5 * m) / (2.0 * std::numbers::pi * std::sqrt(sigma.det()));
}

EigenPair eigen_sym2(const CovMatrix2& sigma) {
    const double m = 0.5 * (sigma.sxx + sigma.syy);
    const double d = 0.5 * (sigma.sxx - sigma.syy);
    const double rad = std::sqrt(d * d + sigma.sxy * sigma.sxy);

    EigenPair e;
    e.lambda1 = m + rad;
    e.lambda2 = m - rad;
    if (e.lambda1 < 0.0) e.lambda1 = 0.0;
    if (e.lambda2 < 0.0) e.lambda2 = 0.0;

    if (rad == 0.0) return e;  // isotropic: keep axis-aligned basis

    // Eigenvector for lambda1; the branch picks whichever closed form avoids
    // cancellation (rad >= |d| always).
    double vx, vy;
    if (d >= 0.0) {
        vx = d + rad;
        vy = sigma.sxy;
    } else {
        vx = sigma.sxy;
        vy = rad - d;
    }
    const double norm = std::hypot(vx, vy);
    if (norm == 0.0) return e;
    vx /= norm;
    vy /= norm;
    if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) {
        vx = -vx;
        vy = -vy;
    }
    e.v1x = vx;
    e.v1y = vy;
    // Perpendicular, then the same sign convention.
    double ux = -vy, uy = vx;
    if (ux < 0.0 || (ux == 0.0 && uy < 0.0)) {
        ux = -ux;
        uy = -uy;
    }
    e.v2x = ux;
    e.v2y = uy;
    return e;
}

double axis_ratio(const EigenPair& eig) {
    if (eig.lambda1 <= 0.0) return 1.0;
    return std::sqrt(eig.lambda2 / eig.lambda1);
}

}  // namespace gapfill
