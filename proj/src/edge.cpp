#include "swarmseg/edge.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swarmseg {

namespace {

inline int clampi(int v, int lo, int hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[i + radius] = w;
        sum += w;
    }
    for (double& w : k)
        w /= sum;
    return k;
}

} // namespace

FloatMap gaussian_blur(const GrayImage& image, double sigma) {
    if (sigma <= 0.0)
        throw std::invalid_argument("gaussian_blur: sigma must be > 0");
    const std::vector<double> kernel = gaussian_kernel(sigma);
    const int radius = static_cast<int>(kernel.size() / 2);
    const int w = image.width;
    const int h = image.height;

    FloatMap tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * image.at(clampi(x + i, 0, w - 1), y);
            tmp.at(x, y) = acc;
        }
    }
    FloatMap out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * tmp.at(x, clampi(y + i, 0, h - 1));
            out.at(x, y) = acc;
        }
    }
    return out;
}

GradientPair sobel_gradients(const FloatMap& map) {
    if (map.width < 3 || map.height < 3)
        throw std::invalid_argument("sobel_gradients: image must be at least 3x3");
    const int w = map.width;
    const int h = map.height;
    GradientPair g{FloatMap(w, h), FloatMap(w, h)};
    for (int y = 0; y < h; ++y) {
        const int ym = clampi(y - 1, 0, h - 1);
        const int yp = clampi(y + 1, 0, h - 1);
        for (int x = 0; x < w; ++x) {
            const int xm = clampi(x - 1, 0, w - 1);
            const int xp = clampi(x + 1, 0, w - 1);
            const double tl = map.at(xm, ym), tc = map.at(x, ym), tr = map.at(xp, ym);
            const double ml = map.at(xm, y), mr = map.at(xp, y);
            const double bl = map.at(xm, yp), bc = map.at(x, yp), br = map.at(xp, yp);
            g.gx.at(x, y) = (tr + 2.0 * mr + br) - (tl + 2.0 * ml + bl);
            g.gy.at(x, y) = (bl + 2.0 * bc + br) - (tl + 2.0 * tc + tr);
        }
    }
    return g;
}

FloatMap gradient_magnitude(const GradientPair& g) {
    FloatMap out(g.gx.width, g.gx.height);
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = std::hypot(g.gx.data[i], g.gy.data[i]);
    return out;
}

FloatMap non_max_suppress(const FloatMap& magnitude, const GradientPair& g) {
    if (magnitude.width != g.gx.width || magnitude.height != g.gx.height)
        throw std::invalid_argument("non_max_suppress: dimension mismatch");
    const int w = magnitude.width;
    const int h = magnitude.height;
    FloatMap out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double m = magnitude.at(x, y);
            double angle = std::atan2(g.gy.at(x, y), g.gx.at(x, y)) * 180.0 / M_PI;
            if (angle < 0.0)
                angle += 180.0;
            int dx, dy;
            if (angle < 22.5 || angle >= 157.5) {
                dx = 1; dy = 0;           // gradient ~horizontal
            } else if (angle < 67.5) {
                dx = 1; dy = 1;           // ~45 degrees (y grows downward)
            } else if (angle < 112.5) {
                dx = 0; dy = 1;           // ~vertical
            } else {
                dx = -1; dy = 1;          // ~135 degrees
            }
            const double n1 = magnitude.at(clampi(x + dx, 0, w - 1), clampi(y + dy, 0, h - 1));
            const double n2 = magnitude.at(clampi(x - dx, 0, w - 1), clampi(y - dy, 0, h - 1));
            out.at(x, y) = (m >= n1 && m >= n2) ? m : 0.0;
        }
    }
    return out;
}

BinaryMask hysteresis(const FloatMap& nms_magnitude, double low, double high) {
    if (low < 0.0 || high < low)
        throw std::invalid_argument("hysteresis: need 0 <= low <= high");
    const int w = nms_magnitude.width;
    const int h = nms_magnitude.height;
    BinaryMask edges(w, h);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (nms_magnitude.at(x, y) >= high && edges.at(x, y) == 0) {
                edges.at(x, y) = 255;
                stack.emplace_back(x, y);
                while (!stack.empty()) {
                    auto [cx, cy] = stack.back();
                    stack.pop_back();
                    for (int ny = cy - 1; ny <= cy + 1; ++ny) {
                        for (int nx = cx - 1; nx <= cx + 1; ++nx) {
                            if (nx < 0 || ny < 0 || nx >= w || ny >= h || edges.at(nx, ny) != 0)
                                continue;
                            if (nms_magnitude.at(nx, ny) >= low) {
                                edges.at(nx, ny) = 255;
                                stack.emplace_back(nx, ny);
                            }
                        }
                    }
                }
            }
        }
    }
    return edges;
}

BinaryMask canny(const GrayImage& image, const CannyParams& params) {
    if (image.width < 3 || image.height < 3)
        throw std::invalid_argument("canny: image must be at least 3x3");
    const FloatMap blurred = gaussian_blur(image, params.sigma);
    const GradientPair g = sobel_gradients(blurred);
    const FloatMap mag = gradient_magnitude(g);
    const FloatMap nms = non_max_suppress(mag, g);
    return hysteresis(nms, params.low, params.high);
}

std::size_t edge_sum(const BinaryMask& mask) {
    std::size_t n = 0;
    for (std::uint8_t v : mask.data)
        if (v == 255)
            ++n;
    return n;
}

} // namespace swarmseg
