#pragma once

#include <cstdint>
#include <vector>

namespace swarmseg {

/// 8-bit grayscale raster, row-major. data.size() == width*height.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Row-major mask; every element is 0 or 255.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Row-major real-valued per-pixel map (gradients, distances, attention). Values stay finite.
struct FloatMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    FloatMap() = default;
    FloatMap(int w, int h, double fill = 0.0);

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Row-major interleaved 8-bit RGB. data.size() == 3*width*height.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;
    RgbImage(int w, int h);

    std::uint8_t channel(int x, int y, int c) const {
        return data[3 * (static_cast<std::size_t>(y) * width + x) + c];
    }
    std::uint8_t& channel(int x, int y, int c) {
        return data[3 * (static_cast<std::size_t>(y) * width + x) + c];
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Pixel >= t maps to 255, else 0.
BinaryMask binarize(const GrayImage& image, int threshold);

/// 256 counts; counts[v] = number of pixels with intensity v.
std::vector<std::size_t> histogram(const GrayImage& image);

/// Fraction of 255 pixels.
double foreground_fraction(const BinaryMask& mask);

/// Min-max rescale to [0,1]; a constant map becomes all zeros.
FloatMap normalize(const FloatMap& map);

/// Widening copy, intensities kept verbatim.
FloatMap to_float(const GrayImage& image);

/// Reinterpret a mask as a grayscale image (values stay 0/255).
GrayImage as_gray(const BinaryMask& mask);

} // namespace swarmseg
