#include "gapfill/morphology.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "gapfill/parallel.hpp"

namespace gapfill {

StructuralElement ellipse_element(const CovMatrix2& sigma, int r_clip) {
    if (r_clip < 0) throw std::invalid_argument("element clip radius must be >= 0");
    StructuralElement e;
    for (int j = -r_clip; j <= r_clip; ++j)
        for (int i = -r_clip; i <= r_clip; ++i)
            if (mahalanobis_sq(sigma, i, j) < 4.0) e.offsets.push_back({i, j});
    return e;
}

BinaryImage adaptive_dilate(const BinaryImage& img, const MorphParams& params, int threads,
                            Traversal order) {
    if (params.alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    const NeighborhoodMask mask = make_mask(params.radius);

    // The covariance machinery reads intensities; foreground maps to 1.0.
    GrayImage gray(img.width, img.height);
    for (size_t i = 0; i < img.data.size(); ++i) gray.data[i] = img.data[i] ? 1.0 : 0.0;

    BinaryImage out = img;
    const int nthreads = resolve_threads(threads);
    std::vector<BinaryImage> scratch;  // per-band stamp buffers, OR-merged below
    scratch.resize(static_cast<size_t>(std::min(nthreads, std::max(img.height, 1))));

    std::atomic<size_t> band_idx{0};
    parallel_for_rows(img.height, threads, [&](int y0, int y1) {
        BinaryImage& buf = scratch[band_idx.fetch_add(1)];
        buf = BinaryImage(img.width, img.height);
        auto visit = [&](int x, int y) {
            if (!img.px(x, y)) return;
            const CovMatrix2 sigma = weighted_covariance(gray, {x, y}, mask).regularized();
            const EigenPair eig = eigen_sym2(sigma);
            const bool fire = params.gate == GateForm::SqrtRatio
                                  ? axis_ratio(eig) <= params.alpha
                                  : eig.lambda2 / eig.lambda1 <= params.alpha;
            if (!fire) return;
            for (PixelCoord o : ellipse_element(sigma, params.radius).offsets) {
                const int px = x + o.x, py = y + o.y;
                if (buf.in_bounds(px, py)) buf.px(px, py) = 1;
            }
        };
        if (order == Traversal::Forward) {
            for (int y = y0; y < y1; ++y)
                for (int x = 0; x < img.width; ++x) visit(x, y);
        } else {
            for (int y = y1 - 1; y >= y0; --y)
                for (int x = img.width - 1; x >= 0; --x) visit(x, y);
        }
    });
    for (const BinaryImage& buf : scratch) {
        if (buf.size() != out.size()) continue;  // band never ran (height < threads)
        for (size_t i = 0; i < out.data.size(); ++i) out.data[i] |= buf.data[i];
    }
    return out;
}

BinaryImage classical_dilate(const BinaryImage& img, int radius) {
    const NeighborhoodMask mask = make_mask(radius);
    BinaryImage out = img;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (!img.px(x, y)) continue;
            for (PixelCoord o : mask.offsets) {
                const int px = x + o.x, py = y + o.y;
                if (out.in_bounds(px, py)) out.px(px, py) = 1;
            }
        }
    }
    return out;
}

}  // namespace gapfill
