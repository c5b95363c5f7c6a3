#include "gapfill/pipeline.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

#include "gapfill/gauss_filter.hpp"
#include "gapfill/image_io.hpp"
#include "gapfill/skeleton.hpp"
#include "kv_config.hpp"

namespace gapfill {

namespace {

// check_emit is deferred until run time: a config file may rely on the CLI
// to supply output_dir after parsing.
void validate(const PipelineConfig& cfg, bool check_emit) {
    if (cfg.blur_radius < 1) throw std::invalid_argument("blur_radius must be >= 1");
    if (cfg.morph_radius < 1) throw std::invalid_argument("morph_radius must be >= 1");
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0, 1]");
    if (cfg.morph_iterations < 1)
        throw std::invalid_argument("morph_iterations must be >= 1");
    if (cfg.prune_length < 0) throw std::invalid_argument("prune_length must be >= 0");
    if (check_emit && cfg.emit_intermediates && cfg.output_dir.empty())
        throw std::invalid_argument("emit_intermediates requires output_dir");
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(name) + " stage: " + e.what());
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(name) + " stage: " + e.what());
    }
}

}  // namespace

PipelineResult run_pipeline(const GrayImage& input, const PipelineConfig& cfg) {
    validate(cfg, true);
    PipelineResult r;

    r.blurred = stage("blur", [&] {
        return quantize8(
            local_gaussian_blur(input, BlurParams{cfg.blur_radius, true, 0.25}, cfg.threads));
    });

    r.binary = stage("threshold", [&]() -> BinaryImage {
        const Histogram256 hist = histogram(r.blurred);
        ThresholdModel model;
        try {
            model = cfg.threshold_method == ThresholdMethod::Cec ? cec_threshold_1d(hist)
                                                                 : otsu_threshold(hist);
        } catch (const std::runtime_error& e) {
            // A constant image has nothing to split: no structure, not a
            // failure.  Other errors still propagate.
            if (std::string(e.what()).find("degenerate histogram") != std::string::npos)
                return BinaryImage(input.width, input.height);
            throw;
        }
        BinaryImage b = apply_threshold(r.blurred, model);
        if (cfg.invert)
            for (uint8_t& v : b.data) v ^= 1;
        return b;
    });

    r.morphed = stage("morph", [&] {
        const MorphParams mp{cfg.morph_radius, cfg.alpha, cfg.gate};
        BinaryImage cur = r.binary;
        for (int i = 0; i < cfg.morph_iterations; ++i)
            cur = adaptive_dilate(cur, mp, cfg.threads);
        return cur;
    });

    r.thinned = stage("thin", [&] { return thin(r.morphed); });
    r.pruned = stage("prune", [&] { return prune(r.thinned, PruneParams{cfg.prune_length}); });
    r.skeleton = stage("component", [&] { return largest_component(r.pruned); });
    r.overlay = stage("overlay", [&] { return quantize8(overlay(input, r.skeleton, 1.0)); });

    if (cfg.emit_intermediates) {
        stage("emit", [&] {
            namespace fs = std::filesystem;
            fs::create_directories(cfg.output_dir);
            const fs::path dir(cfg.output_dir);
            write_image((dir / "01_blur.pgm").string(), r.blurred);
            write_image((dir / "02_binary.pgm").string(), r.binary);
            write_image((dir / "03_morph.pgm").string(), r.morphed);
            write_image((dir / "04_thin.pgm").string(), r.thinned);
            write_image((dir / "05_prune.pgm").string(), r.pruned);
            write_image((dir / "06_final.pgm").string(), r.skeleton);
            return 0;
        });
    }
    return r;
}

PipelineConfig parse_pipeline_config(const std::string& text) {
    PipelineConfig cfg;
    for (const detail::KvEntry& e : detail::parse_kv_text(text)) {
        if (e.key == "blur_radius") {
            cfg.blur_radius = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "threshold_method") {
            if (e.value == "cec")
                cfg.threshold_method = ThresholdMethod::Cec;
            else if (e.value == "otsu")
                cfg.threshold_method = ThresholdMethod::Otsu;
            else
                detail::bad_entry(e, "threshold_method must be 'cec' or 'otsu'");
        } else if (e.key == "invert") {
            cfg.invert = detail::parse_bool(e);
        } else if (e.key == "morph_radius") {
            cfg.morph_radius = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "alpha") {
            cfg.alpha = detail::parse_real(e);
        } else if (e.key == "gate") {
            if (e.value == "sqrt_ratio")
                cfg.gate = GateForm::SqrtRatio;
            else if (e.value == "squared_ratio")
                cfg.gate = GateForm::SquaredRatio;
            else
                detail::bad_entry(e, "gate must be 'sqrt_ratio' or 'squared_ratio'");
        } else if (e.key == "morph_iterations") {
            cfg.morph_iterations = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "prune_length") {
            cfg.prune_length = static_cast<int>(detail::parse_int(e));
        } else if (e.key == "emit_intermediates") {
            cfg.emit_intermediates = detail::parse_bool(e);
        } else if (e.key == "output_dir") {
            cfg.output_dir = e.value;
        } else if (e.key == "threads") {
            cfg.threads = static_cast<int>(detail::parse_int(e));
        } else {
            detail::bad_entry(e, "unknown key");
        }
    }
    validate(cfg, false);
    return cfg;
}

PipelineConfig load_pipeline_config(const std::string& path) {
    return parse_pipeline_config(detail::read_text_file(path));
}

}  // namespace gapfill
