#include "swarmseg/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "swarmseg/edge.hpp"
#include "swarmseg/geometry.hpp"
#include "swarmseg/image_io.hpp"
#include "swarmseg/version.hpp"

namespace fs = std::filesystem;

namespace swarmseg {

namespace {

bool analyzable(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".pgm" || ext == ".png";
}

int count_holes(const BinaryMask& holes, int min_area) {
    const LabelMap labels = connected_components(holes, Connectivity::Eight);
    std::vector<int> area(static_cast<std::size_t>(labels.count) + 1, 0);
    for (std::int32_t lbl : labels.labels)
        if (lbl != 0)
            ++area[lbl];
    int n = 0;
    for (int k = 1; k <= labels.count; ++k)
        if (area[k] >= min_area)
            ++n;
    return n;
}

double effective_scale(const AttentionParams& params) {
    return params.softmax_scale > 0.0 ? params.softmax_scale : 1.0 / std::sqrt(3.0);
}

} // namespace

std::vector<std::string> collect_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const std::string& entry : inputs) {
        const fs::path p(entry);
        if (fs::is_directory(p)) {
            for (const auto& item : fs::directory_iterator(p))
                if (item.is_regular_file() && analyzable(item.path()))
                    files.push_back(item.path().string());
        } else {
            files.push_back(entry); // missing files fail per sample, not here
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

SampleRecord process_sample(const GrayImage& image, const std::string& sample_id,
                            const AnalysisConfig& cfg,
                            std::optional<double> fixed_threshold) {
    SampleRecord rec;
    rec.sample_id = sample_id;

    double continuous_t;
    if (fixed_threshold) {
        continuous_t = *fixed_threshold;
        rec.best_fitness = round6(fitness_edges(image, continuous_t, cfg.fitness));
        rec.iterations_used = 0;
    } else {
        const PsoResult pso = optimize_threshold(image, cfg.pso, cfg.fitness);
        continuous_t = pso.best_threshold;
        rec.best_fitness = round6(pso.best_fitness);
        rec.iterations_used = static_cast<int>(pso.history.size());
    }
    rec.threshold = round6(continuous_t);
    const int ti = static_cast<int>(std::lround(rec.threshold));

    const BinaryMask mask = binarize(image, ti);
    rec.white_fraction = round6(foreground_fraction(mask));
    rec.degenerate = rec.white_fraction <= cfg.fitness.penalty_low ||
                     rec.white_fraction >= cfg.fitness.penalty_high;

    const BinaryMask edges = canny(as_gray(mask), cfg.fitness.canny);
    rec.edge_count = static_cast<std::int64_t>(edge_sum(edges));
    if (rec.edge_count == 0)
        throw std::runtime_error("degenerate segmentation: no interface edges detected");

    const DistanceField dist = distance_transform(edges);
    const FloatMap blurred = gaussian_blur(image, cfg.fitness.canny.sigma);
    const FloatMap grad_norm = normalize(gradient_magnitude(sobel_gradients(blurred)));

    const FloatMap attn = attention_map(grad_norm, dist, cfg.attention);
    const PatchFeatures pf = patch_features(image, grad_norm, cfg.attention.patch_size);
    const AttentionMatrix S = self_attention(pf, effective_scale(cfg.attention));
    const FloatMap saliency = saliency_map(S, pf);

    InterfaceMetrics metrics =
        interface_metrics(image, mask, edges, dist, static_cast<double>(ti), cfg.band_width);
    metrics.transition_sharpness = round6(metrics.transition_sharpness);
    metrics.defect_density = round6(metrics.defect_density);
    metrics.edge_density = round6(metrics.edge_density);
    metrics.white_fraction = round6(metrics.white_fraction);
    rec.metrics = metrics;

    rec.hole_count = count_holes(find_holes(mask), cfg.min_hole_area);

    const fs::path out_dir(cfg.out_dir);
    if (cfg.emit.mask) {
        rec.segmented_path = sample_id + "_segmented.pgm";
        save_image(mask, (out_dir / rec.segmented_path).string());
    }
    if (cfg.emit.overlay) {
        rec.overlay_path = sample_id + "_overlay.ppm";
        save_image(overlay(image, attn, cfg.colormap, cfg.overlay_alpha),
                   (out_dir / rec.overlay_path).string());
    }
    if (cfg.emit.composite) {
        FloatMap proximity(dist.width, dist.height);
        for (std::size_t i = 0; i < dist.data.size(); ++i)
            proximity.data[i] = std::exp(-dist.data[i] / cfg.attention.decay);
        rec.composite_path = sample_id + "_composite.ppm";
        save_image(multichannel_composite(grad_norm, normalize(proximity), image),
                   (out_dir / rec.composite_path).string());
    }
    if (cfg.emit.saliency) {
        rec.saliency_path = sample_id + "_saliency.ppm";
        save_image(apply_colormap(saliency, cfg.colormap),
                   (out_dir / rec.saliency_path).string());
    }
    return rec;
}

AnalysisReport run_analysis(const AnalysisConfig& cfg) {
    fs::create_directories(cfg.out_dir);

    AnalysisReport report;
    report.tool_version = kToolVersion;
    report.seed = cfg.pso.seed;
    report.config_digest = config_digest(cfg);

    const std::vector<std::string> files = collect_inputs(cfg.inputs);

    // Stems name the samples; duplicates get a positional suffix.
    std::map<std::string, int> stem_uses;
    for (const std::string& file : files) {
        std::string id = fs::path(file).stem().string();
        const int n = ++stem_uses[id];
        if (n > 1)
            id += "_" + std::to_string(n);

        SampleRecord rec;
        try {
            const GrayImage image = load_image(file);
            rec = process_sample(image, id, cfg);
        } catch (const std::exception& e) {
            rec = SampleRecord{};
            rec.sample_id = id;
            rec.failed = true;
            rec.error = e.what();
        }
        report.samples.push_back(std::move(rec));
    }
    return report;
}

} // namespace swarmseg
