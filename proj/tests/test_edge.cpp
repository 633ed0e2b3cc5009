#include <doctest.h>

#include <stdexcept>
#include <string>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "swarmseg/edge.hpp"
#include "swarmseg/rng.hpp"

using namespace swarmseg;
using testutil::make_gray;
using testutil::rotate90;
using testutil::vertical_step;

namespace {

GrayImage random_image(int w, int h, std::uint64_t seed) {
    SplitMix64 rng(seed);
    GrayImage img(w, h);
    for (auto& v : img.data)
        v = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
    return img;
}

} // namespace

TEST_CASE("gaussian blur preserves constant images exactly enough") {
    const FloatMap out = gaussian_blur(GrayImage(9, 7, 80), 1.4);
    for (double v : out.data)
        CHECK(v == doctest::Approx(80.0).epsilon(1e-12));
}

TEST_CASE("gaussian blur of a bright pixel is flip-symmetric") {
    GrayImage img(11, 11, 0);
    img.at(5, 5) = 255;
    const FloatMap out = gaussian_blur(img, 1.4);
    for (int y = 0; y < 11; ++y)
        for (int x = 0; x < 11; ++x) {
            CHECK(out.at(x, y) == doctest::Approx(out.at(10 - x, y)).epsilon(1e-12));
            CHECK(out.at(x, y) == doctest::Approx(out.at(x, 10 - y)).epsilon(1e-12));
        }
}

TEST_CASE("1-D impulse row reproduces the normalized kernel weights") {
    // Independent oracle: evaluate exp(-x^2 / 2 sigma^2) and normalize.
    const double sigma = 1.4;
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& w : kernel)
        w /= sum;

    const int center = 15;
    GrayImage img(31, 1, 0);
    img.at(center, 0) = 255;
    const FloatMap out = gaussian_blur(img, sigma);
    for (int x = 0; x < 31; ++x) {
        const int k = x - center;
        const double expected = std::abs(k) <= radius ? 255.0 * kernel[k + radius] : 0.0;
        CHECK(out.at(x, 0) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("gaussian blur rejects non-positive sigma") {
    CHECK_THROWS_AS(gaussian_blur(GrayImage(3, 3, 0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_blur(GrayImage(3, 3, 0), -1.0), std::invalid_argument);
}

TEST_CASE("sobel of a constant map is zero") {
    const GradientPair g = sobel_gradients(FloatMap(5, 4, 42.0));
    for (std::size_t i = 0; i < g.gx.data.size(); ++i) {
        CHECK(g.gx.data[i] == 0.0);
        CHECK(g.gy.data[i] == 0.0);
    }
}

TEST_CASE("sobel rejects images smaller than 3x3") {
    CHECK_THROWS_AS(sobel_gradients(FloatMap(2, 5, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(sobel_gradients(FloatMap(5, 2, 0.0)), std::invalid_argument);
}

TEST_CASE("sobel of a vertical step: hand-evaluated 1020 at the step columns") {
    // Step between columns 4 and 5 (0 -> 255); every row identical, so gy = 0
    // and gx at the two step-adjacent columns sums the full kernel: 255*4.
    const int c = 5;
    const FloatMap map = to_float(vertical_step(12, 6, c, 0, 255));
    const GradientPair g = sobel_gradients(map);
    for (int y = 0; y < 6; ++y) {
        CHECK(g.gx.at(c - 1, y) == doctest::Approx(1020.0));
        CHECK(g.gx.at(c, y) == doctest::Approx(1020.0));
        CHECK(g.gx.at(c - 2, y) == 0.0);
        CHECK(g.gx.at(c + 1, y) == 0.0);
    }
    for (double v : g.gy.data)
        CHECK(v == 0.0);
    const FloatMap mag = gradient_magnitude(g);
    for (int y = 0; y < 6; ++y)
        CHECK(mag.at(c, y) == doctest::Approx(1020.0));
}

TEST_CASE("gradient magnitude is the Euclidean norm") {
    GradientPair g{FloatMap(1, 1, 3.0), FloatMap(1, 1, 4.0)};
    CHECK(gradient_magnitude(g).data[0] == doctest::Approx(5.0));
    GradientPair zero{FloatMap(2, 2, 0.0), FloatMap(2, 2, 0.0)};
    for (double v : gradient_magnitude(zero).data)
        CHECK(v == 0.0);
}

TEST_CASE("90-degree rotation commutes with gradient magnitude") {
    const GrayImage img = random_image(13, 9, 321);
    const FloatMap mag_plain = gradient_magnitude(sobel_gradients(to_float(img)));
    const FloatMap mag_rotated = gradient_magnitude(sobel_gradients(to_float(rotate90(img))));
    const FloatMap rotated_mag = rotate90(mag_plain);
    REQUIRE(mag_rotated.width == rotated_mag.width);
    for (std::size_t i = 0; i < rotated_mag.data.size(); ++i)
        REQUIRE(mag_rotated.data[i] == doctest::Approx(rotated_mag.data[i]).epsilon(1e-9));
}

TEST_CASE("canny of a constant image is empty") {
    const BinaryMask edges = canny(GrayImage(16, 16, 77), CannyParams{});
    CHECK(edge_sum(edges) == 0);
}

TEST_CASE("canny localizes a clean vertical step") {
    const int c = 9;
    const GrayImage img = vertical_step(20, 14, c, 20, 220);
    const BinaryMask edges = canny(img, CannyParams{});
    REQUIRE(edge_sum(edges) > 0);

    int per_row_min = 99, per_row_max = 0;
    for (int y = 0; y < img.height; ++y) {
        int in_row = 0;
        for (int x = 0; x < img.width; ++x) {
            if (edges.at(x, y) == 255) {
                ++in_row;
                // within 1 px of the true boundary column
                REQUIRE(std::abs(x - c) <= 1);
            }
        }
        per_row_min = std::min(per_row_min, in_row);
        per_row_max = std::max(per_row_max, in_row);
    }
    CHECK(per_row_min >= 1); // continuous top to bottom
    CHECK(per_row_max <= 2); // at most the two tie columns
}

TEST_CASE("edge_sum counts marked pixels") {
    CHECK(edge_sum(BinaryMask(8, 8, 0)) == 0);
    BinaryMask mask(8, 1, 0);
    for (int x = 2; x < 7; ++x)
        mask.at(x, 0) = 255;
    CHECK(edge_sum(mask) == 5);
}

TEST_CASE("edge pixels survive NMS and sit above the low threshold") {
    const GrayImage img = random_image(24, 18, 777);
    const CannyParams params{};
    const FloatMap blurred = gaussian_blur(img, params.sigma);
    const GradientPair g = sobel_gradients(blurred);
    const FloatMap mag = gradient_magnitude(g);
    const FloatMap nms = non_max_suppress(mag, g);
    const BinaryMask edges = canny(img, params);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (edges.at(x, y) == 255) {
                REQUIRE(nms.at(x, y) > 0.0);
                REQUIRE(mag.at(x, y) >= params.low);
            }
}

TEST_CASE("raising the high threshold never adds edge pixels") {
    const GrayImage img = random_image(32, 24, 4242);
    CannyParams lo_params{1.4, 30.0, 60.0};
    CannyParams hi_params{1.4, 30.0, 110.0};
    const BinaryMask loose = canny(img, lo_params);
    const BinaryMask strict = canny(img, hi_params);
    for (std::size_t i = 0; i < loose.data.size(); ++i)
        if (strict.data[i] == 255)
            REQUIRE(loose.data[i] == 255);
}
