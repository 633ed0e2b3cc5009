#include "swarmseg/pso.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "swarmseg/rng.hpp"

namespace swarmseg {

namespace {

inline double clampd(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

void check_config(const PsoConfig& c) {
    if (c.swarm_size < 2)
        throw std::invalid_argument("pso: swarm_size must be >= 2");
    if (c.max_iterations < 0)
        throw std::invalid_argument("pso: max_iterations must be >= 0");
    if (!(c.bound_lo < c.bound_hi))
        throw std::invalid_argument("pso: bounds must satisfy lo < hi");
    if (!(c.inertia > 0.0 && c.inertia < 1.0))
        throw std::invalid_argument("pso: inertia must be in (0,1)");
    if (!(c.cognitive > 0.0) || !(c.social > 0.0))
        throw std::invalid_argument("pso: cognitive/social must be > 0");
    if (!(c.velocity_clamp_fraction > 0.0))
        throw std::invalid_argument("pso: velocity_clamp_fraction must be > 0");
}

[[noreturn]] void fail_nonfinite(double x) {
    std::ostringstream msg;
    msg << "pso: non-finite fitness at position " << x;
    throw std::runtime_error(msg.str());
}

} // namespace

double fitness_edges(const GrayImage& image, double t, const FitnessParams& params) {
    if (!std::isfinite(t))
        throw std::invalid_argument("fitness_edges: threshold must be finite");
    if (!(params.penalty_low > 0.0 && params.penalty_low < params.penalty_high &&
          params.penalty_high < 1.0))
        throw std::invalid_argument("fitness_edges: need 0 < penalty_low < penalty_high < 1");
    const double penalty = params.penalty_value.value_or(static_cast<double>(image.pixel_count()));
    if (!(penalty > 0.0))
        throw std::invalid_argument("fitness_edges: penalty_value must be > 0");
    const int ti = static_cast<int>(std::lround(t));
    const BinaryMask mask = binarize(image, ti);
    const double white = foreground_fraction(mask);
    const double base = static_cast<double>(edge_sum(canny(as_gray(mask), params.canny)));
    if (white < params.penalty_low || white > params.penalty_high)
        return base + penalty;
    return base;
}

PsoResult pso_optimize(const std::function<double(double)>& fitness, const PsoConfig& config) {
    check_config(config);
    const int n = config.swarm_size;
    const double lo = config.bound_lo;
    const double hi = config.bound_hi;
    const double range = hi - lo;
    const double vmax = config.velocity_clamp_fraction * range;

    SplitMix64 rng(config.seed);
    std::vector<double> x(n), v(n), pbest_x(n), pbest_f(n);

    for (int i = 0; i < n; ++i)
        x[i] = lo + rng.next_unit() * range;
    for (int i = 0; i < n; ++i)
        v[i] = (2.0 * rng.next_unit() - 1.0) * 0.1 * range;

    PsoResult result;
    double gbest_x = x[0];
    double gbest_f = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double f = fitness(x[i]);
        if (!std::isfinite(f))
            fail_nonfinite(x[i]);
        ++result.evaluations;
        pbest_x[i] = x[i];
        pbest_f[i] = f;
        if (f < gbest_f) {
            gbest_f = f;
            gbest_x = x[i];
        }
    }

    std::vector<double> r1(n), r2(n);
    result.history.reserve(config.max_iterations);
    for (int iter = 0; iter < config.max_iterations; ++iter) {
        for (int i = 0; i < n; ++i) {
            r1[i] = rng.next_unit();
            r2[i] = rng.next_unit();
        }
        // Synchronous update against the previous iteration's global best, so
        // the fitness evaluations below are order-independent.
        for (int i = 0; i < n; ++i) {
            v[i] = config.inertia * v[i] + config.cognitive * r1[i] * (pbest_x[i] - x[i]) +
                   config.social * r2[i] * (gbest_x - x[i]);
            v[i] = clampd(v[i], -vmax, vmax);
            x[i] = clampd(x[i] + v[i], lo, hi);
        }
        for (int i = 0; i < n; ++i) {
            const double f = fitness(x[i]);
            if (!std::isfinite(f))
                fail_nonfinite(x[i]);
            ++result.evaluations;
            if (f < pbest_f[i]) {
                pbest_f[i] = f;
                pbest_x[i] = x[i];
            }
        }
        for (int i = 0; i < n; ++i) {
            if (pbest_f[i] < gbest_f) {
                gbest_f = pbest_f[i];
                gbest_x = pbest_x[i];
            }
        }
        result.history.push_back(gbest_f);
    }

    result.best_threshold = gbest_x;
    result.best_fitness = gbest_f;
    return result;
}

PsoResult optimize_threshold(const GrayImage& image, const PsoConfig& config,
                             const FitnessParams& fp) {
    std::map<int, double> cache;
    auto fitness = [&](double t) {
        const int ti = static_cast<int>(std::lround(t));
        auto it = cache.find(ti);
        if (it != cache.end())
            return it->second;
        const double f = fitness_edges(image, t, fp);
        cache.emplace(ti, f);
        return f;
    };
    return pso_optimize(fitness, config);
}

} // namespace swarmseg
