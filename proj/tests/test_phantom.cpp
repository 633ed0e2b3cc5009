#include <doctest.h>

#include <stdexcept>
#include <string>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "swarmseg/edge.hpp"
#include "swarmseg/geometry.hpp"
#include "swarmseg/image.hpp"
#include "swarmseg/phantom.hpp"

using namespace swarmseg;

namespace {

PhantomSpec default_spec() {
    PhantomSpec spec;
    spec.width = 128;
    spec.height = 128;
    spec.background_mean = 132.0;
    spec.background_std = 14.0;
    spec.deposit_mean = 200.0;
    spec.deposit_std = 14.0;
    spec.u_depth = 44.0;
    spec.u_width = 74.0;
    spec.seed = 7;
    return spec;
}

} // namespace

TEST_CASE("zero noise renders exactly two intensities") {
    PhantomSpec spec = default_spec();
    spec.background_std = 0.0;
    spec.deposit_std = 0.0;
    const PhantomSample s = synth_sample(spec);
    std::set<int> values;
    for (std::uint8_t v : s.image.data)
        values.insert(v);
    CHECK(values == std::set<int>{132, 200});
}

TEST_CASE("same spec and seed reproduce the image bit for bit") {
    const PhantomSpec spec = default_spec();
    const PhantomSample a = synth_sample(spec);
    const PhantomSample b = synth_sample(spec);
    CHECK(a.image.data == b.image.data);
    PhantomSpec other = spec;
    other.seed = spec.seed + 1;
    CHECK(synth_sample(other).image.data != a.image.data);
}

TEST_CASE("interface curve follows the rim and the U dip") {
    const PhantomSpec spec = default_spec();
    const PhantomSample s = synth_sample(spec);
    const double rim = spec.height / 4.0;
    CHECK(s.interface_y[0] == doctest::Approx(rim));
    CHECK(s.interface_y[spec.width - 1] == doctest::Approx(rim));
    // deepest point at the horizontal center
    double deepest = 0.0;
    for (double v : s.interface_y)
        deepest = std::max(deepest, v);
    CHECK(deepest <= rim + spec.u_depth + 1e-9);
    CHECK(deepest >= rim + spec.u_depth * 0.95);
}

TEST_CASE("deposit mask matches the interface curve") {
    const PhantomSpec spec = default_spec();
    const PhantomSample s = synth_sample(spec);
    for (int x = 0; x < spec.width; x += 5)
        for (int y = 0; y < spec.height; y += 5) {
            const bool expected = (y + 0.5) < s.interface_y[x];
            CHECK((s.deposit.at(x, y) == 255) == expected);
        }
}

TEST_CASE("histogram shows modes at the class means and a valley near 166") {
    PhantomSpec spec = default_spec();
    spec.width = 192;
    spec.height = 192;
    const PhantomSample s = synth_sample(spec);
    const auto counts = histogram(s.image);

    // moving-average smoothing, radius 5
    std::vector<double> smooth(256, 0.0);
    for (int v = 0; v < 256; ++v) {
        double acc = 0.0;
        int n = 0;
        for (int k = -5; k <= 5; ++k)
            if (v + k >= 0 && v + k < 256) {
                acc += static_cast<double>(counts[v + k]);
                ++n;
            }
        smooth[v] = acc / n;
    }
    auto argmax_in = [&](int lo, int hi) {
        int best = lo;
        for (int v = lo; v <= hi; ++v)
            if (smooth[v] > smooth[best])
                best = v;
        return best;
    };
    const int mode_bg = argmax_in(100, 164);
    const int mode_dep = argmax_in(168, 232);
    CHECK(std::abs(mode_bg - 132) <= 3);
    CHECK(std::abs(mode_dep - 200) <= 3);

    int valley = mode_bg;
    for (int v = mode_bg; v <= mode_dep; ++v)
        if (smooth[v] < smooth[valley])
            valley = v;
    CHECK(std::abs(valley - 166) <= 3);
}

TEST_CASE("voids are carved out of the deposit and recoverable as holes") {
    PhantomSpec spec = default_spec();
    spec.voids = {{64.0, 30.0, 6.0, 4.0}, {50.0, 24.0, 4.0, 4.0}};
    const PhantomSample s = synth_sample(spec);
    std::size_t void_px = 0;
    for (std::size_t i = 0; i < s.voids.data.size(); ++i) {
        if (s.voids.data[i] == 255) {
            ++void_px;
            REQUIRE(s.deposit.data[i] == 0);
        }
    }
    REQUIRE(void_px > 0);
    // ground-truth masks agree: enclosed background of the deposit GT is the void GT
    const BinaryMask holes = find_holes(s.deposit);
    CHECK(holes.data == s.voids.data);
    CHECK(connected_components(holes, Connectivity::Eight).count == 2);
}

TEST_CASE("canny outlines the interface and every internal void") {
    PhantomSpec spec;
    spec.width = 192;
    spec.height = 192;
    spec.background_mean = 132.0;
    spec.background_std = 10.0;
    spec.deposit_mean = 200.0;
    spec.deposit_std = 10.0;
    spec.u_depth = 55.0;
    spec.u_width = 110.0;
    spec.voids = {{96.0, 40.0, 8.0, 6.0}, {70.0, 30.0, 5.0, 5.0}};
    spec.seed = 21;
    const PhantomSample s = synth_sample(spec);

    const BinaryMask mask = binarize(s.image, 166);
    const BinaryMask edges = canny(as_gray(mask), CannyParams{});
    REQUIRE(edge_sum(edges) > 0);
    const DistanceField to_edges = distance_transform(edges);

    // every void-boundary pixel has a detected edge within 2 px
    for (int y = 1; y < spec.height - 1; ++y)
        for (int x = 1; x < spec.width - 1; ++x) {
            if (s.voids.at(x, y) != 255)
                continue;
            const bool boundary = s.voids.at(x - 1, y) == 0 || s.voids.at(x + 1, y) == 0 ||
                                  s.voids.at(x, y - 1) == 0 || s.voids.at(x, y + 1) == 0;
            if (boundary)
                REQUIRE(to_edges.at(x, y) <= 2.0);
        }

    // the deposit/substrate outline is traced in every column
    int covered = 0;
    for (int x = 0; x < spec.width; ++x) {
        for (int y = 0; y < spec.height; ++y)
            if (edges.at(x, y) == 255 && std::abs(y + 0.5 - s.interface_y[x]) <= 3.0) {
                ++covered;
                break;
            }
    }
    CHECK(covered >= spec.width * 9 / 10);
}

TEST_CASE("a void outside the deposit region is rejected") {
    PhantomSpec spec = default_spec();
    spec.voids = {{10.0, 120.0, 5.0, 5.0}}; // deep in the substrate
    CHECK_THROWS_AS(synth_sample(spec), std::invalid_argument);
}

TEST_CASE("degenerate specs are rejected") {
    PhantomSpec spec = default_spec();
    spec.deposit_mean = spec.background_mean;
    CHECK_THROWS_AS(synth_sample(spec), std::invalid_argument);
    spec = default_spec();
    spec.background_mean = -3.0;
    CHECK_THROWS_AS(synth_sample(spec), std::invalid_argument);
    spec = default_spec();
    spec.u_width = 0.0;
    CHECK_THROWS_AS(synth_sample(spec), std::invalid_argument);
}
