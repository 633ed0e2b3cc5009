#pragma once

#include <cstdint>
#include <vector>

#include "swarmseg/image.hpp"

namespace swarmseg {

/// Connected-component labels, row-major. 0 = background of the labeling pass,
/// foreground components carry contiguous ids 1..count in first-encounter order.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;
    int count = 0;

    std::int32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

/// Euclidean distances in pixels to the nearest feature pixel; exactly 0 on
/// feature pixels and finite everywhere once one feature exists.
using DistanceField = FloatMap;

enum class Connectivity { Four = 4, Eight = 8 };

/// Exact squared Euclidean distances to the nearest 255 pixel, via the
/// two-pass 1-D squared-distance-envelope algorithm (rows, then the parabola
/// lower envelope down each column). Throws when the mask has no features.
std::vector<std::int64_t> distance_transform_squared(const BinaryMask& features);

/// sqrt of distance_transform_squared, as a FloatMap.
DistanceField distance_transform(const BinaryMask& features);

/// Two-pass union-find labeling of 255 pixels.
LabelMap connected_components(const BinaryMask& mask, Connectivity connectivity);

/// Marks background components that do not touch the image border (enclosed
/// voids). Background connectivity is 4, the complement of 8-connected
/// foreground.
BinaryMask find_holes(const BinaryMask& deposit);

/// Pixels within `width` (Euclidean) of an edge pixel.
BinaryMask interface_band(const BinaryMask& edges, double width);

} // namespace swarmseg
