#pragma once

// Helpers shared by the test suites.  Oracles here are written independently
// of the library internals on purpose: plain loops, no shared kernels.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "gapfill/image.hpp"

namespace testutil {

// Unique scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("gapfill_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

// Build a binary image from rows of '.' (0) and '#' (1).
inline gapfill::BinaryImage binary_from(const std::vector<std::string>& rows) {
    gapfill::BinaryImage img(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) img.px(x, y) = rows[y][x] == '#' ? 1 : 0;
    return img;
}

// Independent 8-connected component counter (BFS, no library code).
inline int count_components(const gapfill::BinaryImage& img) {
    std::vector<uint8_t> seen(img.size(), 0);
    int components = 0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const size_t idx = static_cast<size_t>(y) * img.width + x;
            if (!img.px(x, y) || seen[idx]) continue;
            ++components;
            std::queue<std::pair<int, int>> q;
            q.push({x, y});
            seen[idx] = 1;
            while (!q.empty()) {
                auto [cx, cy] = q.front();
                q.pop();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = cx + dx, ny = cy + dy;
                        if (!img.in_bounds(nx, ny) || !img.px(nx, ny)) continue;
                        const size_t nidx = static_cast<size_t>(ny) * img.width + nx;
                        if (seen[nidx]) continue;
                        seen[nidx] = 1;
                        q.push({nx, ny});
                    }
                }
            }
        }
    }
    return components;
}

// Seeded random grayscale image on the 8-bit grid (as if read from disk).
inline gapfill::GrayImage random_gray(int w, int h, uint32_t seed) {
    std::mt19937 rng(seed);
    gapfill::GrayImage img(w, h);
    for (double& v : img.data) v = static_cast<double>(rng() % 256) / 255.0;
    return img;
}

// Seeded random binary image with roughly the given fill fraction.
inline gapfill::BinaryImage random_binary(int w, int h, uint32_t seed, double fill) {
    std::mt19937 rng(seed);
    gapfill::BinaryImage img(w, h);
    const uint32_t cut = static_cast<uint32_t>(fill * 4294967295.0);
    for (uint8_t& v : img.data) v = rng() < cut ? 1 : 0;
    return img;
}

// Seeded union of random solid discs: rounded connected shapes like the ones
// dilation hands to the thinning stage.  Uniform speckle is not a stand-in
// here; an isolated 2x2 block with diagonal arms on all four corners cannot
// lose a pixel without splitting a component.
inline gapfill::BinaryImage random_blobs(int w, int h, uint32_t seed, int discs = 10) {
    std::mt19937 rng(seed);
    gapfill::BinaryImage img(w, h);
    for (int d = 0; d < discs; ++d) {
        const int cx = static_cast<int>(rng() % w);
        const int cy = static_cast<int>(rng() % h);
        const int r = 2 + static_cast<int>(rng() % 5);
        for (int y = std::max(0, cy - r); y <= std::min(h - 1, cy + r); ++y)
            for (int x = std::max(0, cx - r); x <= std::min(w - 1, cx + r); ++x)
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) img.px(x, y) = 1;
    }
    return img;
}

inline bool is_subset(const gapfill::BinaryImage& a, const gapfill::BinaryImage& b) {
    if (a.width != b.width || a.height != b.height) return false;
    for (size_t i = 0; i < a.data.size(); ++i)
        if (a.data[i] && !b.data[i]) return false;
    return true;
}

}  // namespace testutil
