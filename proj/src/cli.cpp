#include "gapfill/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "gapfill/gauss_filter.hpp"
#include "gapfill/image_io.hpp"
#include "gapfill/morphology.hpp"
#include "gapfill/pipeline.hpp"
#include "gapfill/skeleton.hpp"
#include "gapfill/synth.hpp"
#include "gapfill/threshold.hpp"

namespace gapfill {

namespace {

namespace fs = std::filesystem;

// Nonexistent inputs are usage errors (exit 2), unlike processing failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
    if (!fs::exists(path)) throw UsageError(path + ": no such file");
}

const std::map<std::string, ThresholdMethod> kMethodNames{
    {"cec", ThresholdMethod::Cec}, {"otsu", ThresholdMethod::Otsu}};
const std::map<std::string, GateForm> kGateNames{
    {"sqrt_ratio", GateForm::SqrtRatio}, {"squared_ratio", GateForm::SquaredRatio}};

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Completes broken curve-like structures in grayscale images: "
                 "orientation-adaptive blur, histogram thresholding, covariance-gated "
                 "dilation, and skeleton extraction."};
    app.require_subcommand(1);
    std::function<void()> action;

    // ---- blur ----
    auto* blur = app.add_subcommand("blur", "Orientation-adaptive local Gaussian blur");
    struct {
        std::string input, output;
        int radius = 15;
        bool no_normalize = false;
        double epsilon = 0.25;
        bool classical = false;
        double scale = 4.0;
        int threads = 0;
    } blur_opt;
    blur->add_option("--input", blur_opt.input, "Input image (PGM or PNG)")->required();
    blur->add_option("--output", blur_opt.output, "Output image")->required();
    blur->add_option("--radius", blur_opt.radius, "Neighborhood radius")
        ->check(CLI::PositiveNumber);
    blur->add_flag("--no-normalize", blur_opt.no_normalize, "Raw kernel sums, no mass division");
    blur->add_option("--epsilon", blur_opt.epsilon, "Ridge for degenerate covariances");
    blur->add_flag("--classical", blur_opt.classical, "Isotropic blur (fixed covariance s*I)");
    blur->add_option("--scale", blur_opt.scale, "Isotropic variance s for --classical");
    blur->add_option("--threads", blur_opt.threads, "Worker threads (0 = all)");
    blur->callback([&] {
        action = [&] {
            require_file(blur_opt.input);
            const GrayImage img = read_image(blur_opt.input);
            const GrayImage out =
                blur_opt.classical
                    ? classical_gaussian_blur(img, blur_opt.scale, blur_opt.radius,
                                              blur_opt.threads)
                    : local_gaussian_blur(
                          img, BlurParams{blur_opt.radius, !blur_opt.no_normalize,
                                          blur_opt.epsilon},
                          blur_opt.threads);
            write_image(blur_opt.output, out);
        };
    });

    // ---- threshold ----
    auto* thr = app.add_subcommand("threshold", "Histogram binarization (CEC or Otsu)");
    struct {
        std::string input, output;
        ThresholdMethod method = ThresholdMethod::Cec;
        bool invert = false;
    } thr_opt;
    thr->add_option("--input", thr_opt.input, "Input image")->required();
    thr->add_option("--output", thr_opt.output, "Output binary image")->required();
    thr->add_option("--method", thr_opt.method, "Threshold selection method")
        ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
    thr->add_flag("--invert", thr_opt.invert, "Select dark structures on bright background");
    thr->callback([&] {
        action = [&] {
            require_file(thr_opt.input);
            const GrayImage img = read_image(thr_opt.input);
            const Histogram256 hist = histogram(img);
            const ThresholdModel model = thr_opt.method == ThresholdMethod::Cec
                                             ? cec_threshold_1d(hist)
                                             : otsu_threshold(hist);
            BinaryImage out = apply_threshold(img, model);
            if (thr_opt.invert)
                for (uint8_t& v : out.data) v ^= 1;
            write_image(thr_opt.output, out);
        };
    });

    // ---- morph ----
    auto* morph = app.add_subcommand("morph", "Anisotropy-gated elliptical dilation");
    struct {
        std::string input, output;
        int radius = 25;
        double alpha = 0.25;
        GateForm gate = GateForm::SqrtRatio;
        int iterations = 1;
        bool classical = false;
        int threads = 0;
    } morph_opt;
    morph->add_option("--input", morph_opt.input, "Input binary image")->required();
    morph->add_option("--output", morph_opt.output, "Output binary image")->required();
    morph->add_option("--radius", morph_opt.radius, "Neighborhood / element clip radius")
        ->check(CLI::PositiveNumber);
    morph->add_option("--alpha", morph_opt.alpha, "Elongation gate threshold")
        ->check(CLI::Range(0.0, 1.0));
    morph->add_option("--gate", morph_opt.gate, "Gate statistic")
        ->transform(CLI::CheckedTransformer(kGateNames, CLI::ignore_case));
    morph->add_option("--iterations", morph_opt.iterations, "Repeat count")
        ->check(CLI::PositiveNumber);
    morph->add_flag("--classical", morph_opt.classical, "Unconditional disc dilation");
    morph->add_option("--threads", morph_opt.threads, "Worker threads (0 = all)");
    morph->callback([&] {
        action = [&] {
            require_file(morph_opt.input);
            BinaryImage img = read_binary_image(morph_opt.input);
            for (int i = 0; i < morph_opt.iterations; ++i)
                img = morph_opt.classical
                          ? classical_dilate(img, morph_opt.radius)
                          : adaptive_dilate(img,
                                            MorphParams{morph_opt.radius, morph_opt.alpha,
                                                        morph_opt.gate},
                                            morph_opt.threads);
            write_image(morph_opt.output, img);
        };
    });

    // ---- skeleton ----
    auto* skel = app.add_subcommand("skeleton", "Thin, prune spurs, keep main component");
    struct {
        std::string input, output;
        int prune_length = 10;
        bool keep_all = false;
    } skel_opt;
    skel->add_option("--input", skel_opt.input, "Input binary image")->required();
    skel->add_option("--output", skel_opt.output, "Output skeleton image")->required();
    skel->add_option("--prune-length", skel_opt.prune_length, "Max spur length to remove")
        ->check(CLI::NonNegativeNumber);
    skel->add_flag("--keep-all-components", skel_opt.keep_all,
                   "Skip the largest-component selection");
    skel->callback([&] {
        action = [&] {
            require_file(skel_opt.input);
            BinaryImage img = thin(read_binary_image(skel_opt.input));
            img = prune(img, PruneParams{skel_opt.prune_length});
            if (!skel_opt.keep_all) img = largest_component(img);
            write_image(skel_opt.output, img);
        };
    });

    // ---- pipeline ----
    auto* pipe = app.add_subcommand("pipeline", "Full completion pipeline");
    struct {
        std::string input, output_dir, config;
    } pipe_opt;
    PipelineConfig pcfg;
    pipe->add_option("--input", pipe_opt.input, "Input image")->required();
    pipe->add_option("--output-dir", pipe_opt.output_dir, "Directory for results")->required();
    pipe->add_option("--config", pipe_opt.config, "key=value config file");
    auto* o_blur_r = pipe->add_option("--blur-radius", pcfg.blur_radius, "Blur radius");
    auto* o_method = pipe->add_option("--threshold-method", pcfg.threshold_method, "cec or otsu")
                         ->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
    auto* o_invert = pipe->add_flag("--invert", pcfg.invert, "Dark-foreground input");
    auto* o_morph_r = pipe->add_option("--morph-radius", pcfg.morph_radius, "Dilation radius");
    auto* o_alpha = pipe->add_option("--alpha", pcfg.alpha, "Elongation gate threshold")
                        ->check(CLI::Range(0.0, 1.0));
    auto* o_gate = pipe->add_option("--gate", pcfg.gate, "Gate statistic")
                       ->transform(CLI::CheckedTransformer(kGateNames, CLI::ignore_case));
    auto* o_iters = pipe->add_option("--morph-iterations", pcfg.morph_iterations, "Dilations");
    auto* o_prune = pipe->add_option("--prune-length", pcfg.prune_length, "Max spur length");
    auto* o_emit = pipe->add_flag("--emit-intermediates", pcfg.emit_intermediates,
                                  "Write every stage image");
    auto* o_threads = pipe->add_option("--threads", pcfg.threads, "Worker threads (0 = all)");
    pipe->callback([&] {
        action = [&] {
            require_file(pipe_opt.input);
            PipelineConfig cfg;
            if (!pipe_opt.config.empty()) {
                require_file(pipe_opt.config);
                cfg = load_pipeline_config(pipe_opt.config);
            }
            // Explicit flags override the config file.
            if (o_blur_r->count()) cfg.blur_radius = pcfg.blur_radius;
            if (o_method->count()) cfg.threshold_method = pcfg.threshold_method;
            if (o_invert->count()) cfg.invert = pcfg.invert;
            if (o_morph_r->count()) cfg.morph_radius = pcfg.morph_radius;
            if (o_alpha->count()) cfg.alpha = pcfg.alpha;
            if (o_gate->count()) cfg.gate = pcfg.gate;
            if (o_iters->count()) cfg.morph_iterations = pcfg.morph_iterations;
            if (o_prune->count()) cfg.prune_length = pcfg.prune_length;
            if (o_emit->count()) cfg.emit_intermediates = pcfg.emit_intermediates;
            if (o_threads->count()) cfg.threads = pcfg.threads;
            cfg.output_dir = pipe_opt.output_dir;

            const GrayImage img = read_image(pipe_opt.input);
            const PipelineResult res = run_pipeline(img, cfg);
            fs::create_directories(cfg.output_dir);
            const fs::path dir(cfg.output_dir);
            if (!cfg.emit_intermediates)
                write_image((dir / "06_final.pgm").string(), res.skeleton);
            write_image((dir / "overlay.pgm").string(), res.overlay);
        };
    });

    // ---- synth ----
    auto* synth = app.add_subcommand("synth", "Render a synthetic test image");
    struct {
        std::string spec, output;
    } synth_opt;
    synth->add_option("--spec", synth_opt.spec, "key=value scene description")->required();
    synth->add_option("--output", synth_opt.output, "Output image")->required();
    synth->callback([&] {
        action = [&] {
            require_file(synth_opt.spec);
            write_image(synth_opt.output, synthesize(load_synth_spec(synth_opt.spec)));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 is --help/--version
    }

    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace gapfill
