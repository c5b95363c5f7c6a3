#include "gapfill/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kv_config.hpp"

namespace gapfill {

namespace {

// Standard-normal draws via Box-Muller on raw mt19937 words.  The stdlib's
// normal_distribution is implementation-defined, which would break the
// byte-identical regeneration contract across toolchains.
class NormalSource {
public:
    explicit NormalSource(uint32_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        constexpr double kInv32 = 1.0 / 4294967296.0;
        const double u1 = (static_cast<double>(rng_()) + 1.0) * kInv32;  // (0, 1]
        const double u2 = static_cast<double>(rng_()) * kInv32;          // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void validate(const SynthSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0)
        throw std::invalid_argument("canvas dimensions must be positive");
    if (spec.gap_length > 0.0 && spec.dash_length < 1.0)
        throw std::invalid_argument("dash_length must be >= 1 when gaps are enabled");
    if (spec.gap_length < 0.0 || spec.dash_length < 0.0)
        throw std::invalid_argument("dash pattern lengths must be >= 0");
    for (double level : {spec.line_level, spec.bg_level})
        if (level < 0.0 || level > 1.0)
            throw std::invalid_argument("intensity levels must lie in [0, 1]");
    if (spec.noise_sigma < 0.0) throw std::invalid_argument("noise_sigma must be >= 0");
    if (spec.speckle_density < 0.0 || spec.speckle_density > 1.0)
        throw std::invalid_argument("speckle_density must lie in [0, 1]");
    for (const SynthSegment& s : spec.segments)
        if (s.thickness <= 0.0) throw std::invalid_argument("segment thickness must be > 0");
}

void paint_segment(GrayImage& img, const SynthSegment& seg, double dash, double gap,
                   double level) {
    const double dx = seg.x1 - seg.x0, dy = seg.y1 - seg.y0;
    const double len = std::hypot(dx, dy);
    const double half = seg.thickness / 2.0;
    const double period = dash + gap;
    const auto dash_on = [&](double t) {
        if (gap <= 0.0 || dash <= 0.0) return true;
        return std::fmod(t, period) < dash;
    };

    const int x_lo = std::max(0, static_cast<int>(std::floor(std::min(seg.x0, seg.x1) - half - 1)));
    const int x_hi = std::min(img.width - 1,
                              static_cast<int>(std::ceil(std::max(seg.x0, seg.x1) + half + 1)));
    const int y_lo = std::max(0, static_cast<int>(std::floor(std::min(seg.y0, seg.y1) - half - 1)));
    const int y_hi = std::min(img.height - 1,
                              static_cast<int>(std::ceil(std::max(seg.y0, seg.y1) + half + 1)));

    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            double t = 0.0;
            if (len > 0.0) {
                t = ((x - seg.x0) * dx + (y - seg.y0) * dy) / len;
                t = std::clamp(t, 0.0, len);
            }
            const double px = len > 0.0 ? seg.x0 + t * dx / len : seg.x0;
            const double py = len > 0.0 ? seg.y0 + t * dy / len : seg.y0;
            const double dist = std::hypot(x - px, y - py);
            if (dist <= half && dash_on(t)) img.px(x, y) = level;
        }
    }
}

}  // namespace

GrayImage synthesize(const SynthSpec& spec) {
    validate(spec);
    GrayImage img(spec.width, spec.height, spec.bg_level);

    if (spec.background == BackgroundKind::Speckle && spec.speckle_density > 0.0) {
        std::mt19937 rng(spec.speckle_seed);
        constexpr double kInv32 = 1.0 / 4294967296.0;
        for (double& v : img.data)
            if (static_cast<double>(rng()) * kInv32 < spec.speckle_density)
                v = std::clamp(v + spec.speckle_amplitude, 0.0, 1.0);
    }

    for (const SynthSegment& seg : spec.segments)
        paint_segment(img, seg, spec.dash_length, spec.gap_length, spec.line_level);

    if (spec.noise_sigma > 0.0) {
        NormalSource noise(spec.seed);
        for (double& v : img.data)
            v = std::clamp(v + spec.noise_sigma * noise.next(), 0.0, 1.0);
    }
    return img;
}

SynthSpec parse_synth_spec(const std::string& text) {
    SynthSpec spec;
    for (const detail::KvEntry& e : detail::parse_kv_text(text)) {
        if (e.key == "width") {
            spec.width = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "height") {
            spec.height = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "dash_length") {
            spec.dash_length = detail::parse_real(e);
        } else if (e.key == "gap_length") {
            spec.gap_length = detail::parse_real(e);
        } else if (e.key == "line_level") {
            spec.line_level = detail::parse_real(e);
        } else if (e.key == "background") {
            if (e.value == "flat")
                spec.background = BackgroundKind::Flat;
            else if (e.value == "speckle")
                spec.background = BackgroundKind::Speckle;
            else
                detail::bad_entry(e, "background must be 'flat' or 'speckle'");
        } else if (e.key == "bg_level") {
            spec.bg_level = detail::parse_real(e);
        } else if (e.key == "speckle_density") {
            spec.speckle_density = detail::parse_real(e);
        } else if (e.key == "speckle_amplitude") {
            spec.speckle_amplitude = detail::parse_real(e);
        } else if (e.key == "speckle_seed") {
            spec.speckle_seed = static_cast<uint32_t>(detail::parse_int(e));
        } else if (e.key == "noise_sigma") {
            spec.noise_sigma = detail::parse_real(e);
        } else if (e.key == "seed") {
            spec.seed = static_cast<uint32_t>(detail::parse_int(e));
        } else if (e.key == "segment") {
            std::istringstream ss(e.value);
            double vals[5];
            char sep = ',';
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) {
                if (i > 0) ok = static_cast<bool>(ss >> sep) && sep == ',';
                if (ok) ok = static_cast<bool>(ss >> vals[i]);
            }
            ss >> std::ws;
            if (!ok || !ss.eof())
                detail::bad_entry(e, "segment needs 5 numbers: x0,y0,x1,y1,thickness");
            spec.segments.push_back({vals[0], vals[1], vals[2], vals[3], vals[4]});
        } else {
            detail::bad_entry(e, "unknown key");
        }
    }
    validate(spec);
    return spec;
}

SynthSpec load_synth_spec(const std::string& path) {
    return parse_synth_spec(detail::read_text_file(path));
}

}  // namespace gapfill
