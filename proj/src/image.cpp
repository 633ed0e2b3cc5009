#include "swarmseg/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmseg {

namespace {

void check_dims(int w, int h) {
    if (w < 1 || h < 1)
        throw std::invalid_argument("raster dimensions must be >= 1");
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    if (fill != 0 && fill != 255)
        throw std::invalid_argument("mask fill must be 0 or 255");
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

FloatMap::FloatMap(int w, int h, double fill) : width(w), height(h) {
    check_dims(w, h);
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
    check_dims(w, h);
    data.assign(3 * static_cast<std::size_t>(w) * h, 0);
}

BinaryMask binarize(const GrayImage& image, int threshold) {
    BinaryMask mask(image.width, image.height);
    for (std::size_t i = 0; i < image.data.size(); ++i)
        mask.data[i] = image.data[i] >= threshold ? 255 : 0;
    return mask;
}

std::vector<std::size_t> histogram(const GrayImage& image) {
    std::vector<std::size_t> counts(256, 0);
    for (std::uint8_t v : image.data)
        ++counts[v];
    return counts;
}

double foreground_fraction(const BinaryMask& mask) {
    std::size_t on = 0;
    for (std::uint8_t v : mask.data)
        if (v == 255)
            ++on;
    return static_cast<double>(on) / static_cast<double>(mask.pixel_count());
}

FloatMap normalize(const FloatMap& map) {
    auto [lo_it, hi_it] = std::minmax_element(map.data.begin(), map.data.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    FloatMap out(map.width, map.height);
    if (hi > lo) {
        const double scale = 1.0 / (hi - lo);
        for (std::size_t i = 0; i < map.data.size(); ++i)
            out.data[i] = (map.data[i] - lo) * scale;
    }
    return out;
}

FloatMap to_float(const GrayImage& image) {
    FloatMap out(image.width, image.height);
    for (std::size_t i = 0; i < image.data.size(); ++i)
        out.data[i] = static_cast<double>(image.data[i]);
    return out;
}

GrayImage as_gray(const BinaryMask& mask) {
    GrayImage out(mask.width, mask.height);
    out.data = mask.data;
    return out;
}

} // namespace swarmseg
