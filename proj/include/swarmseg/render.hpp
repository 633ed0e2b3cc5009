#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "swarmseg/image.hpp"

namespace swarmseg {

/// Piecewise-linear colormap. Anchor positions are strictly increasing with
/// first = 0 and last = 1.
struct Colormap {
    struct Anchor {
        double pos;
        std::array<std::uint8_t, 3> rgb;
    };
    std::vector<Anchor> anchors;

    /// Dark blue -> cyan -> green-yellow -> yellow ramp used for attention and
    /// saliency renders.
    static Colormap standard();
};

/// Maps values through the colormap with per-channel linear interpolation,
/// rounding half-away-from-zero. Out-of-range values clamp to [0,1]; the clamp
/// count is reported through `clamped` when given.
RgbImage apply_colormap(const FloatMap& map, const Colormap& cmap, std::size_t* clamped = nullptr);

/// out = (1-alpha)*gray + alpha*colormap(attn) per channel.
RgbImage overlay(const GrayImage& base, const FloatMap& attn, const Colormap& cmap, double alpha);

/// R = round(255*boundary), G = round(255*spatial), B = density.
RgbImage multichannel_composite(const FloatMap& boundary, const FloatMap& spatial,
                                const GrayImage& density);

} // namespace swarmseg
