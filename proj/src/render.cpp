#include "swarmseg/render.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmseg {

namespace {

void check_colormap(const Colormap& cmap) {
    if (cmap.anchors.size() < 2)
        throw std::invalid_argument("colormap: need at least two anchors");
    if (cmap.anchors.front().pos != 0.0 || cmap.anchors.back().pos != 1.0)
        throw std::invalid_argument("colormap: anchors must span [0,1]");
    for (std::size_t i = 1; i < cmap.anchors.size(); ++i)
        if (!(cmap.anchors[i - 1].pos < cmap.anchors[i].pos))
            throw std::invalid_argument("colormap: anchor positions must be strictly increasing");
}

inline std::uint8_t round_channel(double v) {
    // half-away-from-zero, so renders are bit-exact across implementations
    const long r = std::lround(v);
    return static_cast<std::uint8_t>(r < 0 ? 0 : (r > 255 ? 255 : r));
}

std::array<std::uint8_t, 3> sample(const Colormap& cmap, double v) {
    std::size_t hi = 1;
    while (hi + 1 < cmap.anchors.size() && cmap.anchors[hi].pos < v)
        ++hi;
    const Colormap::Anchor& a = cmap.anchors[hi - 1];
    const Colormap::Anchor& b = cmap.anchors[hi];
    const double t = (v - a.pos) / (b.pos - a.pos);
    std::array<std::uint8_t, 3> out;
    for (int c = 0; c < 3; ++c)
        out[c] = round_channel(a.rgb[c] + t * (static_cast<double>(b.rgb[c]) - a.rgb[c]));
    return out;
}

} // namespace

Colormap Colormap::standard() {
    return Colormap{{
        {0.00, {20, 20, 120}},
        {0.35, {0, 180, 200}},
        {0.70, {150, 220, 80}},
        {1.00, {255, 235, 40}},
    }};
}

RgbImage apply_colormap(const FloatMap& map, const Colormap& cmap, std::size_t* clamped) {
    check_colormap(cmap);
    RgbImage out(map.width, map.height);
    std::size_t clamp_count = 0;
    for (std::size_t i = 0; i < map.data.size(); ++i) {
        double v = map.data[i];
        if (v < 0.0 || v > 1.0) {
            v = v < 0.0 ? 0.0 : 1.0;
            ++clamp_count;
        }
        const auto rgb = sample(cmap, v);
        out.data[3 * i + 0] = rgb[0];
        out.data[3 * i + 1] = rgb[1];
        out.data[3 * i + 2] = rgb[2];
    }
    if (clamped)
        *clamped = clamp_count;
    return out;
}

RgbImage overlay(const GrayImage& base, const FloatMap& attn, const Colormap& cmap, double alpha) {
    if (base.width != attn.width || base.height != attn.height)
        throw std::invalid_argument("overlay: dimension mismatch");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("overlay: alpha must be in [0,1]");
    const RgbImage colored = apply_colormap(attn, cmap);
    RgbImage out(base.width, base.height);
    for (std::size_t i = 0; i < base.data.size(); ++i) {
        const double g = base.data[i];
        for (int c = 0; c < 3; ++c)
            out.data[3 * i + c] =
                round_channel((1.0 - alpha) * g + alpha * colored.data[3 * i + c]);
    }
    return out;
}

RgbImage multichannel_composite(const FloatMap& boundary, const FloatMap& spatial,
                                const GrayImage& density) {
    if (boundary.width != density.width || boundary.height != density.height ||
        spatial.width != density.width || spatial.height != density.height)
        throw std::invalid_argument("multichannel_composite: dimension mismatch");
    RgbImage out(density.width, density.height);
    for (std::size_t i = 0; i < density.data.size(); ++i) {
        out.data[3 * i + 0] = round_channel(255.0 * boundary.data[i]);
        out.data[3 * i + 1] = round_channel(255.0 * spatial.data[i]);
        out.data[3 * i + 2] = density.data[i];
    }
    return out;
}

} // namespace swarmseg
