#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "swarmseg/image.hpp"

namespace testutil {

inline swarmseg::GrayImage make_gray(int w, int h, std::initializer_list<int> values) {
    swarmseg::GrayImage img(w, h);
    std::size_t i = 0;
    for (int v : values)
        img.data[i++] = static_cast<std::uint8_t>(v);
    return img;
}

inline swarmseg::BinaryMask make_mask(int w, int h, std::initializer_list<int> values) {
    swarmseg::BinaryMask mask(w, h);
    std::size_t i = 0;
    for (int v : values)
        mask.data[i++] = static_cast<std::uint8_t>(v);
    return mask;
}

/// Vertical step: columns < edge_col are `lo`, columns >= edge_col are `hi`.
inline swarmseg::GrayImage vertical_step(int w, int h, int edge_col, int lo, int hi) {
    swarmseg::GrayImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = static_cast<std::uint8_t>(x >= edge_col ? hi : lo);
    return img;
}

/// Counterclockwise quarter turn: (x, y) -> (y, W-1-x) in the result.
inline swarmseg::GrayImage rotate90(const swarmseg::GrayImage& img) {
    swarmseg::GrayImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(y, img.width - 1 - x) = img.at(x, y);
    return out;
}

inline swarmseg::FloatMap rotate90(const swarmseg::FloatMap& map) {
    swarmseg::FloatMap out(map.height, map.width);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x)
            out.at(y, map.width - 1 - x) = map.at(x, y);
    return out;
}

} // namespace testutil
