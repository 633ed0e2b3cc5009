#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "swarmseg/config.hpp"
#include "swarmseg/image_io.hpp"
#include "swarmseg/pipeline.hpp"
#include "swarmseg/pso.hpp"
#include "swarmseg/version.hpp"

namespace fs = std::filesystem;
using namespace swarmseg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSampleFailed = 1;
constexpr int kExitUsage = 2;

struct AnalyzeArgs {
    std::string config_path;
    std::vector<std::string> inputs;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> swarm_size;
    std::optional<int> iterations;
    std::string bounds; // "LO,HI"
    std::string emit;
};

int run_analyze(const AnalyzeArgs& args) {
    AnalysisConfig cfg = parse_analysis_config(args.config_path);
    if (!args.inputs.empty())
        cfg.inputs = args.inputs;
    if (!args.out_dir.empty())
        cfg.out_dir = args.out_dir;
    if (args.seed)
        cfg.pso.seed = *args.seed;
    if (args.swarm_size)
        cfg.pso.swarm_size = *args.swarm_size;
    if (args.iterations)
        cfg.pso.max_iterations = *args.iterations;
    if (!args.bounds.empty()) {
        const std::size_t comma = args.bounds.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--bounds expects LO,HI");
        try {
            cfg.pso.bound_lo = std::stod(args.bounds.substr(0, comma));
            cfg.pso.bound_hi = std::stod(args.bounds.substr(comma + 1));
        } catch (const std::exception&) {
            throw ConfigError("--bounds expects LO,HI");
        }
    }
    if (!args.emit.empty())
        cfg.emit = parse_emit_flags(args.emit);

    const AnalysisReport report = run_analysis(cfg);
    write_report(report, (fs::path(cfg.out_dir) / "report.json").string());

    bool any_failed = false;
    for (const SampleRecord& r : report.samples) {
        if (r.failed) {
            any_failed = true;
            std::cerr << r.sample_id << ": " << r.error << "\n";
        } else {
            std::cout << r.sample_id << ": threshold " << r.threshold << ", fitness "
                      << r.best_fitness << "\n";
        }
    }
    return any_failed ? kExitSampleFailed : kExitOk;
}

int run_synth(const std::string& spec_path, const std::string& out_dir, int count,
              std::optional<std::uint64_t> seed) {
    PhantomSpec base = parse_phantom_spec(spec_path);
    if (seed)
        base.seed = *seed;
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        PhantomSpec spec = base;
        spec.seed = base.seed + static_cast<std::uint64_t>(i);
        const PhantomSample sample = synth_sample(spec);
        char name[32];
        std::snprintf(name, sizeof name, "phantom_%02d", i);
        const fs::path dir(out_dir);
        save_image(sample.image, (dir / (std::string(name) + ".pgm")).string());
        save_image(sample.deposit, (dir / (std::string(name) + "_deposit.pgm")).string());
        save_image(sample.voids, (dir / (std::string(name) + "_voids.pgm")).string());
        std::cout << name << ".pgm\n";
    }
    return kExitOk;
}

int run_optimize(const std::string& input, std::optional<std::uint64_t> seed) {
    PsoConfig pso;
    if (seed)
        pso.seed = *seed;
    try {
        const GrayImage image = load_image(input);
        const PsoResult result = optimize_threshold(image, pso, FitnessParams{});
        char line[128];
        std::snprintf(line, sizeof line, "{\"threshold\": %.6g, \"fitness\": %.6g}\n",
                      round6(result.best_threshold), round6(result.best_fitness));
        std::cout << line;
    } catch (const std::exception& e) {
        std::cerr << input << ": " << e.what() << "\n";
        return kExitSampleFailed;
    }
    return kExitOk;
}

int run_render(const std::string& input, double threshold, const std::string& out_dir) {
    AnalysisConfig cfg;
    cfg.out_dir = out_dir;
    try {
        const GrayImage image = load_image(input);
        fs::create_directories(out_dir);
        const std::string id = fs::path(input).stem().string();
        process_sample(image, id, cfg, threshold);
    } catch (const std::exception& e) {
        std::cerr << input << ": " << e.what() << "\n";
        return kExitSampleFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PSO-driven threshold segmentation and attention-weighted rendering "
                 "for layered-deposition micrographs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "Run the full analysis pipeline on a batch");
    analyze->add_option("--config", analyze_args.config_path, "flat key=value config file")
        ->required();
    analyze->add_option("--input", analyze_args.inputs, "input file or directory (repeatable)");
    analyze->add_option("--out", analyze_args.out_dir, "output directory");
    analyze->add_option("--seed", analyze_args.seed, "PSO seed override");
    analyze->add_option("--swarm-size", analyze_args.swarm_size, "swarm size override");
    analyze->add_option("--iterations", analyze_args.iterations, "iteration count override");
    analyze->add_option("--bounds", analyze_args.bounds, "threshold bounds LO,HI");
    analyze->add_option("--emit", analyze_args.emit,
                        "all, none, or comma list of mask,overlay,composite,saliency");

    std::string synth_spec, synth_out;
    int synth_count = 1;
    std::optional<std::uint64_t> synth_seed;
    CLI::App* synth = app.add_subcommand("synth", "Generate phantom micrographs with ground truth");
    synth->add_option("--spec", synth_spec, "phantom spec file")->required();
    synth->add_option("--out", synth_out, "output directory")->required();
    synth->add_option("--count", synth_count, "number of samples (seed increments)");
    synth->add_option("--seed", synth_seed, "base seed override");

    std::string optimize_input;
    std::optional<std::uint64_t> optimize_seed;
    CLI::App* optimize = app.add_subcommand("optimize", "Print the optimal threshold as JSON");
    optimize->add_option("--input", optimize_input, "image file")->required();
    optimize->add_option("--seed", optimize_seed, "PSO seed");

    std::string render_input, render_out;
    double render_threshold = 0.0;
    CLI::App* render = app.add_subcommand("render", "Re-render visualizations at a fixed threshold");
    render->add_option("--input", render_input, "image file")->required();
    render->add_option("--threshold", render_threshold, "threshold to apply")->required();
    render->add_option("--out", render_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed())
            return run_analyze(analyze_args);
        if (synth->parsed())
            return run_synth(synth_spec, synth_out, synth_count, synth_seed);
        if (optimize->parsed())
            return run_optimize(optimize_input, optimize_seed);
        if (render->parsed())
            return run_render(render_input, render_threshold, render_out);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitSampleFailed;
    }
    return kExitOk;
}
