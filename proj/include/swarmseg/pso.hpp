#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "swarmseg/edge.hpp"
#include "swarmseg/image.hpp"

namespace swarmseg {

struct PsoConfig {
    int swarm_size = 30;
    int max_iterations = 100;
    double bound_lo = 50.0;
    double bound_hi = 200.0;
    double inertia = 0.7298;
    double cognitive = 1.49618;
    double social = 1.49618;
    double velocity_clamp_fraction = 0.2;
    std::uint64_t seed = 0;
};

struct FitnessParams {
    CannyParams canny;
    double penalty_low = 0.05;
    double penalty_high = 0.95;
    // Penalty added when the foreground fraction leaves (penalty_low, penalty_high);
    // unset means the image pixel count, which dominates any achievable edge sum.
    std::optional<double> penalty_value;
};

struct PsoResult {
    double best_threshold = 0.0;
    double best_fitness = 0.0;
    std::vector<double> history; // global-best fitness after each iteration, non-increasing
    std::size_t evaluations = 0;
};

/// Segmentation fitness: Canny edge-pixel count of binarize(image, round(t)),
/// plus the penalty when the mask is predominantly black or white.
double fitness_edges(const GrayImage& image, double t, const FitnessParams& params);

/// Canonical bounded PSO minimizer over one real variable.
///
/// Fully deterministic given config.seed. Draw order from one SplitMix64 stream:
/// positions for particles 0..n-1 (uniform in [lo,hi]), then velocities 0..n-1
/// (uniform in +-0.1*(hi-lo)); each iteration then draws r1, r2 per particle in
/// ascending index order (r1 first). Velocity updates use the global best of the
/// previous iteration, |v| is clamped to velocity_clamp_fraction*(hi-lo), and
/// positions clamp to [lo,hi]. Best updates take strict improvements only.
/// Throws if the fitness returns a non-finite value.
PsoResult pso_optimize(const std::function<double(double)>& fitness, const PsoConfig& config);

/// pso_optimize over fitness_edges(image, ., fp). Because the fitness depends on
/// t only through round(t), evaluations are memoized per integer threshold; the
/// result is bit-identical to the unmemoized run. Downstream segmentation uses
/// round(best_threshold), the same integer the winning evaluation used.
PsoResult optimize_threshold(const GrayImage& image, const PsoConfig& config,
                             const FitnessParams& fp);

} // namespace swarmseg
