#include "swarmseg/phantom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swarmseg/rng.hpp"

namespace swarmseg {

namespace {

void check_spec(const PhantomSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("phantom: dimensions must be >= 1");
    auto in_byte_range = [](double v) { return v >= 0.0 && v <= 255.0; };
    if (!in_byte_range(spec.background_mean) || !in_byte_range(spec.deposit_mean))
        throw std::invalid_argument("phantom: means must be in [0,255]");
    if (!(spec.deposit_mean > spec.background_mean))
        throw std::invalid_argument("phantom: deposit mean must exceed background mean");
    if (spec.background_std < 0.0 || spec.deposit_std < 0.0)
        throw std::invalid_argument("phantom: stddevs must be >= 0");
    if (spec.u_depth < 0.0 || spec.u_width <= 0.0)
        throw std::invalid_argument("phantom: U geometry must satisfy depth >= 0, width > 0");
    for (const VoidSpec& v : spec.voids)
        if (v.rx <= 0.0 || v.ry <= 0.0)
            throw std::invalid_argument("phantom: void radii must be > 0");
}

inline std::uint8_t quantize(double v) {
    const long r = std::lround(v);
    return static_cast<std::uint8_t>(r < 0 ? 0 : (r > 255 ? 255 : r));
}

} // namespace

PhantomSample synth_sample(const PhantomSpec& spec) {
    check_spec(spec);
    const int w = spec.width;
    const int h = spec.height;
    const double rim_y = h / 4.0;
    const double cx = w / 2.0;
    const double half_u = spec.u_width / 2.0;

    PhantomSample s;
    s.image = GrayImage(w, h);
    s.deposit = BinaryMask(w, h);
    s.voids = BinaryMask(w, h);
    s.interface_y.resize(w);

    for (int x = 0; x < w; ++x) {
        const double xc = x + 0.5;
        const double u = (xc - cx) / half_u;
        const double dip = std::abs(u) <= 1.0 ? spec.u_depth * (1.0 - u * u) : 0.0;
        s.interface_y[x] = rim_y + dip;
    }

    auto in_void = [&](double px, double py) {
        for (const VoidSpec& v : spec.voids) {
            const double dx = (px - v.cx) / v.rx;
            const double dy = (py - v.cy) / v.ry;
            if (dx * dx + dy * dy <= 1.0)
                return true;
        }
        return false;
    };

    SplitMix64 rng(spec.seed);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double px = x + 0.5;
            const double py = y + 0.5;
            const bool in_region = py < s.interface_y[x];
            const bool voided = in_void(px, py);
            if (voided && !in_region)
                throw std::invalid_argument("phantom: void extends outside the deposit region");
            const bool is_deposit = in_region && !voided;

            const double u1 = rng.next_unit();
            const double u2 = rng.next_unit();
            const double z = std::sqrt(-2.0 * std::log(1.0 - u1)) *
                             std::cos(2.0 * std::numbers::pi * u2);
            const double mean = is_deposit ? spec.deposit_mean : spec.background_mean;
            const double std_dev = is_deposit ? spec.deposit_std : spec.background_std;
            s.image.at(x, y) = quantize(mean + std_dev * z);
            if (is_deposit)
                s.deposit.at(x, y) = 255;
            if (voided)
                s.voids.at(x, y) = 255;
        }
    }
    return s;
}

} // namespace swarmseg
