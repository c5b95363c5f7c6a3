#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gapfill/gauss_filter.hpp"
#include "test_util.hpp"

using namespace gapfill;

namespace {

GrayImage transpose(const GrayImage& img) {
    GrayImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) out.px(y, x) = img.px(x, y);
    return out;
}

// Straightforward normalized isotropic convolution, written independently of
// the library (plain row-major double loop).  The average runs over the
// samples that exist; kernel mass outside the image is not counted.
double oracle_isotropic_at(const GrayImage& img, int cx, int cy, double s, int r) {
    double num = 0.0, den = 0.0;
    for (int j = -r; j <= r; ++j) {
        for (int i = -r; i <= r; ++i) {
            if (i * i + j * j > r * r) continue;
            if (!img.in_bounds(cx + i, cy + j)) continue;
            const double g =
                std::exp(-0.5 * (i * i + j * j) / s) / (2.0 * std::numbers::pi * s);
            num += g * img.px(cx + i, cy + j);
            den += g;
        }
    }
    return num / den;
}

}  // namespace

TEST_SUITE_BEGIN("gauss_filter");

TEST_CASE("kernel mass and normalized response for a lone bright pixel") {
    GrayImage img(64, 64);
    img.px(32, 32) = 1.0;
    const NeighborhoodMask mask = make_mask(3);
    const CovMatrix2 identity{1.0, 0.0, 1.0};

    const double mass =
        mask.sum_over([&](PixelCoord o) { return gaussian_density(identity, o.x, o.y); });
    CHECK(mass == doctest::Approx(0.9888869679017821).epsilon(1e-14));

    CHECK(convolve_at(img, {32, 32}, identity, mask, true) ==
          doctest::Approx(0.16094351352368402).epsilon(1e-13));
    // unnormalized: just the center kernel value, 1/(2*pi)
    CHECK(convolve_at(img, {32, 32}, identity, mask, false) ==
          doctest::Approx(0.15915494309189535).epsilon(1e-14));
}

TEST_CASE("lone bright pixel blurs to a peak that decays along the axes") {
    GrayImage img(64, 64);
    img.px(32, 32) = 1.0;
    const GrayImage out = local_gaussian_blur(img, BlurParams{3}, 1);
    const double peak = out.px(32, 32);
    for (const double v : out.data) CHECK(v <= peak);
    CHECK(out.px(33, 32) < peak);
    CHECK(out.px(34, 32) < out.px(33, 32));
    CHECK(out.px(35, 32) < out.px(34, 32));
    CHECK(out.px(32, 33) < peak);
    CHECK(out.px(32, 34) < out.px(32, 33));
}

TEST_CASE("constant images pass through the adaptive blur bit-exactly") {
    for (const double level : {0.0, 0.3, 1.0}) {
        for (const int r : {1, 5, 15}) {
            const GrayImage img(32, 32, level);
            const GrayImage out = local_gaussian_blur(img, BlurParams{r}, 2);
            CHECK(out == img);
        }
    }
}

TEST_CASE("classical blur equals the adaptive blur pinned to a fixed covariance") {
    GrayImage img(64, 64);
    img.px(32, 32) = 1.0;
    const GrayImage out = classical_gaussian_blur(img, 1.0, 3, 1);
    CHECK(out.px(32, 32) == doctest::Approx(0.16094351352368402).epsilon(1e-13));
}

TEST_CASE("classical blur matches a direct-sum oracle") {
    const GrayImage img = testutil::random_gray(48, 48, 21);
    for (const double s : {1.0, 4.0}) {
        for (const int r : {3, 5}) {
            const GrayImage out = classical_gaussian_blur(img, s, r, 2);
            double worst = 0.0;
            for (int y = 0; y < img.height; ++y)
                for (int x = 0; x < img.width; ++x)
                    worst = std::max(worst,
                                     std::abs(out.px(x, y) - oracle_isotropic_at(img, x, y, s, r)));
            CHECK(worst <= 1e-12);
        }
    }
}

TEST_CASE("gap centers of a dashed line brighten above the background") {
    // 1-px horizontal line at y=32, 10-on/4-off dashes covering x in [5, 58]
    GrayImage img(64, 64);
    for (int x = 5; x <= 58; ++x)
        if ((x - 5) % 14 < 10) img.px(x, 32) = 1.0;
    REQUIRE(img.px(16, 32) == 0.0);  // inside the first gap
    const GrayImage out = local_gaussian_blur(img, BlurParams{5}, 1);

    double background_max = 0.0;
    for (int y = 0; y < 64; ++y) {
        if (std::abs(y - 32) < 5) continue;
        for (int x = 0; x < 64; ++x) background_max = std::max(background_max, out.px(x, y));
    }
    for (const int gx : {16, 17, 30, 31, 44, 45}) {  // gap centers
        CHECK(out.px(gx, 32) > background_max);
    }
}

TEST_CASE("adaptive blur is bit-exact under transposition") {
    const GrayImage img = testutil::random_gray(40, 28, 4242);
    const GrayImage a = transpose(local_gaussian_blur(img, BlurParams{3}, 2));
    const GrayImage b = local_gaussian_blur(transpose(img), BlurParams{3}, 2);
    CHECK(a == b);
}

TEST_CASE("results are independent of the thread count") {
    const GrayImage img = testutil::random_gray(50, 37, 77);
    const GrayImage one = local_gaussian_blur(img, BlurParams{4}, 1);
    const GrayImage many = local_gaussian_blur(img, BlurParams{4}, 5);
    CHECK(one == many);
    CHECK(local_gaussian_blur(img, BlurParams{4}, 1) == one);  // rerun, same bits
}

TEST_CASE("parameter validation") {
    const GrayImage img(8, 8, 0.5);
    CHECK_THROWS_AS(local_gaussian_blur(img, BlurParams{0}), std::invalid_argument);
    CHECK_THROWS_AS(local_gaussian_blur(img, BlurParams{3, true, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(classical_gaussian_blur(img, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(classical_gaussian_blur(img, -1.0, 3), std::invalid_argument);
}

TEST_SUITE_END();
