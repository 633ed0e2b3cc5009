#include "swarmseg/attention.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmseg/edge.hpp"

namespace swarmseg {

FloatMap attention_map(const FloatMap& grad_norm, const DistanceField& dist,
                       const AttentionParams& params) {
    if (grad_norm.width != dist.width || grad_norm.height != dist.height)
        throw std::invalid_argument("attention_map: dimension mismatch");
    if (params.floor < 0.0 || params.floor >= 1.0)
        throw std::invalid_argument("attention_map: floor must be in [0,1)");
    if (params.decay <= 0.0)
        throw std::invalid_argument("attention_map: decay must be > 0");
    FloatMap out(grad_norm.width, grad_norm.height);
    const double beta = params.floor;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = beta + (1.0 - beta) * grad_norm.data[i] * std::exp(-dist.data[i] / params.decay);
    return out;
}

PatchFeatures patch_features(const GrayImage& image, const FloatMap& grad_norm, int patch_size) {
    if (patch_size < 2)
        throw std::invalid_argument("patch_features: patch_size must be >= 2");
    if (image.width != grad_norm.width || image.height != grad_norm.height)
        throw std::invalid_argument("patch_features: dimension mismatch");

    PatchFeatures pf;
    pf.patch_size = patch_size;
    pf.image_width = image.width;
    pf.image_height = image.height;
    pf.cols = (image.width + patch_size - 1) / patch_size;
    pf.rows = (image.height + patch_size - 1) / patch_size;
    pf.features.reserve(static_cast<std::size_t>(pf.cols) * pf.rows);

    for (int py = 0; py < pf.rows; ++py) {
        for (int px = 0; px < pf.cols; ++px) {
            const int x0 = px * patch_size;
            const int y0 = py * patch_size;
            const int x1 = std::min(x0 + patch_size, image.width);
            const int y1 = std::min(y0 + patch_size, image.height);
            const double n = static_cast<double>(x1 - x0) * (y1 - y0);

            double sum = 0.0, sum_sq = 0.0, grad_sum = 0.0;
            for (int y = y0; y < y1; ++y) {
                for (int x = x0; x < x1; ++x) {
                    const double v = image.at(x, y);
                    sum += v;
                    sum_sq += v * v;
                    grad_sum += grad_norm.at(x, y);
                }
            }
            const double mean = sum / n;
            const double var = std::max(0.0, sum_sq / n - mean * mean);
            pf.features.push_back({mean / 255.0, std::sqrt(var) / 128.0, grad_sum / n});
        }
    }
    return pf;
}

AttentionMatrix self_attention(const PatchFeatures& f, double scale) {
    const int n = f.count();
    if (n < 1 || static_cast<std::size_t>(n) != f.features.size())
        throw std::invalid_argument("self_attention: inconsistent patch features");
    for (const auto& row : f.features)
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("self_attention: non-finite feature");

    AttentionMatrix S;
    S.n = n;
    S.weights.resize(static_cast<std::size_t>(n) * n);
    std::vector<double> scores(n);
    for (int i = 0; i < n; ++i) {
        const auto& fi = f.features[i];
        double row_max = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            const auto& fj = f.features[j];
            const double dot = fi[0] * fj[0] + fi[1] * fj[1] + fi[2] * fj[2];
            scores[j] = dot * scale;
            row_max = std::max(row_max, scores[j]);
        }
        double denom = 0.0;
        for (int j = 0; j < n; ++j) {
            scores[j] = std::exp(scores[j] - row_max);
            denom += scores[j];
        }
        for (int j = 0; j < n; ++j)
            S.weights[static_cast<std::size_t>(i) * n + j] = scores[j] / denom;
    }
    return S;
}

FloatMap saliency_map(const AttentionMatrix& S, const PatchFeatures& layout) {
    if (S.n != layout.count())
        throw std::invalid_argument("saliency_map: attention matrix does not match layout");
    const int n = S.n;

    FloatMap per_patch(layout.cols, layout.rows);
    for (int j = 0; j < n; ++j) {
        double col_sum = 0.0;
        for (int i = 0; i < n; ++i)
            col_sum += S.at(i, j);
        per_patch.data[j] = col_sum / n;
    }
    const FloatMap scaled = normalize(per_patch);

    FloatMap out(layout.image_width, layout.image_height);
    for (int y = 0; y < layout.image_height; ++y) {
        const int py = y / layout.patch_size;
        for (int x = 0; x < layout.image_width; ++x) {
            const int px = x / layout.patch_size;
            out.at(x, y) = scaled.at(px, py);
        }
    }
    return out;
}

InterfaceMetrics interface_metrics(const GrayImage& image, const BinaryMask& deposit,
                                   const BinaryMask& edges, const DistanceField& dist,
                                   double threshold, double band_width) {
    InterfaceMetrics m;
    m.threshold = threshold;
    m.white_fraction = foreground_fraction(deposit);
    m.edge_density = static_cast<double>(edge_sum(edges)) / static_cast<double>(edges.pixel_count());

    const FloatMap mag = gradient_magnitude(sobel_gradients(to_float(image)));
    double band_sum = 0.0, total_sum = 0.0;
    std::size_t band_n = 0;
    const double wsq = band_width * band_width;
    for (std::size_t i = 0; i < mag.data.size(); ++i) {
        total_sum += mag.data[i];
        if (dist.data[i] * dist.data[i] <= wsq) {
            band_sum += mag.data[i];
            ++band_n;
        }
    }
    const double total_mean = total_sum / static_cast<double>(mag.pixel_count());
    const double band_mean = band_n > 0 ? band_sum / static_cast<double>(band_n) : 0.0;
    m.transition_sharpness = total_mean > 0.0 ? band_mean / total_mean : 0.0;

    std::size_t deposit_px = 0;
    for (std::uint8_t v : deposit.data)
        if (v == 255)
            ++deposit_px;
    if (deposit_px > 0) {
        const BinaryMask holes = find_holes(deposit);
        m.defect_density = static_cast<double>(edge_sum(holes)) / static_cast<double>(deposit_px);
    }
    return m;
}

} // namespace swarmseg
