#pragma once

#include <cstdint>
#include <vector>

#include "swarmseg/image.hpp"

namespace swarmseg {

/// Axis-aligned elliptical cavity, in pixel coordinates.
struct VoidSpec {
    double cx = 0.0;
    double cy = 0.0;
    double rx = 0.0;
    double ry = 0.0;
};

/// Synthetic micrograph: a bright deposit band whose lower boundary dips into
/// the darker substrate along a parabolic U, with optional enclosed voids and
/// per-pixel Gaussian intensity noise.
struct PhantomSpec {
    int width = 256;
    int height = 256;
    double background_mean = 132.0;
    double background_std = 8.0;
    double deposit_mean = 200.0; // must exceed background_mean
    double deposit_std = 8.0;
    double u_depth = 90.0; // pixels the U dips below the rim line
    double u_width = 150.0; // full opening width of the U
    std::vector<VoidSpec> voids; // must lie inside the deposit region
    std::uint64_t seed = 0;
};

struct PhantomSample {
    GrayImage image;
    BinaryMask deposit;              // deposit region minus voids
    BinaryMask voids;                // void pixels
    std::vector<double> interface_y; // per-column boundary height (rim + U dip)
};

/// Deterministic render: noise uses one SplitMix64 stream seeded with
/// spec.seed, two draws per pixel in row-major order (Box-Muller, cosine
/// branch). The rim line sits at height/4; the U is centered horizontally.
PhantomSample synth_sample(const PhantomSpec& spec);

} // namespace swarmseg
