#include <doctest.h>

#include <png.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "swarmseg/image_io.hpp"

using namespace swarmseg;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const fs::path dir = fs::temp_directory_path() / "swarmseg_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_raw(const std::string& name, const std::string& bytes) {
    const fs::path path = test_dir() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return path.string();
}

std::string read_raw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// Minimal libpng writer for fixtures; color_type is PNG_COLOR_TYPE_GRAY or _RGB.
std::string write_png(const std::string& name, int w, int h, int color_type, int bit_depth,
                      const std::vector<std::uint8_t>& pixels) {
    const fs::path path = test_dir() / name;
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, fp);
    png_set_IHDR(png, info, w, h, bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const int channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
    const std::size_t stride = static_cast<std::size_t>(w) * channels * (bit_depth / 8);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = const_cast<png_bytep>(pixels.data() + y * stride);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    return path.string();
}

} // namespace

TEST_CASE("P5 decode returns stored bytes") {
    const std::string path = write_raw("basic.pgm", std::string("P5\n2 1\n255\n") +
                                                        std::string("\x07\xfa", 2));
    const GrayImage img = load_image(path);
    CHECK(img.width == 2);
    CHECK(img.height == 1);
    CHECK(img.data == std::vector<std::uint8_t>{7, 250});
}

TEST_CASE("P5 header comments are accepted") {
    const std::string path = write_raw(
        "comment.pgm", std::string("P5\n# a scanner comment\n2 # inline\n1\n255\n") +
                           std::string("\x01\x02", 2));
    const GrayImage img = load_image(path);
    CHECK(img.data == std::vector<std::uint8_t>{1, 2});
}

TEST_CASE("truncated payload raises unexpected end of data") {
    const std::string path = write_raw("trunc.pgm", std::string("P5\n4 1\n255\n") + "ab");
    try {
        load_image(path);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::UnexpectedEof);
        CHECK(std::string(e.what()).find("unexpected end of data") != std::string::npos);
    }
}

TEST_CASE("color P6 input is rejected as unsupported") {
    const std::string path = write_raw("color.ppm", std::string("P6\n1 1\n255\n") + "abc");
    try {
        load_image(path);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::UnsupportedFormat);
    }
}

TEST_CASE("missing file and bad header report distinct kinds") {
    try {
        load_image((test_dir() / "does_not_exist.pgm").string());
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::FileMissing);
    }
    const std::string bad = write_raw("bad.pgm", "P5\nnot_a_number 1\n255\nx");
    try {
        load_image(bad);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::MalformedHeader);
    }
    const std::string deep = write_raw("deep.pgm", std::string("P5\n1 1\n65535\n") + "ab");
    try {
        load_image(deep);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::UnsupportedMaxval);
    }
}

TEST_CASE("gray round-trip preserves pixel data") {
    const GrayImage img = testutil::make_gray(2, 1, {7, 250});
    const std::string path = (test_dir() / "roundtrip.pgm").string();
    save_image(img, path);
    const GrayImage back = load_image(path);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.data == img.data);
}

TEST_CASE("saved all-white mask payload is all 0xFF") {
    const BinaryMask mask(3, 2, 255);
    const std::string path = (test_dir() / "white.pgm").string();
    save_image(mask, path);
    const std::string bytes = read_raw(path);
    CHECK(bytes.substr(0, 11) == "P5\n3 2\n255\n");
    for (std::size_t i = 11; i < bytes.size(); ++i)
        CHECK(static_cast<unsigned char>(bytes[i]) == 0xFF);
    CHECK(bytes.size() == 11 + 6);
}

TEST_CASE("mask round-trip preserves pixel data") {
    const BinaryMask mask = testutil::make_mask(4, 2, {0, 255, 255, 0, 255, 0, 0, 255});
    const std::string path = (test_dir() / "mask_roundtrip.pgm").string();
    save_image(mask, path);
    const GrayImage back = load_image(path);
    CHECK(back.data == mask.data);
}

TEST_CASE("rgb round-trip and P6 payload layout") {
    RgbImage img(1, 1);
    img.data = {1, 2, 3};
    const std::string path = (test_dir() / "tiny.ppm").string();
    save_image(img, path);
    const std::string bytes = read_raw(path);
    CHECK(bytes == std::string("P6\n1 1\n255\n") + std::string("\x01\x02\x03", 3));
    const RgbImage back = load_rgb_image(path);
    CHECK(back.data == img.data);
}

TEST_CASE("grayscale PNG decodes to stored intensities") {
    const std::vector<std::uint8_t> pixels = {5, 120, 250, 33, 0, 255};
    const std::string path = write_png("gray.png", 3, 2, PNG_COLOR_TYPE_GRAY, 8, pixels);
    const GrayImage img = load_image(path);
    CHECK(img.width == 3);
    CHECK(img.height == 2);
    CHECK(img.data == pixels);
}

TEST_CASE("non-grayscale PNG is rejected") {
    const std::vector<std::uint8_t> pixels = {255, 0, 0, 0, 255, 0};
    const std::string path = write_png("rgb.png", 2, 1, PNG_COLOR_TYPE_RGB, 8, pixels);
    try {
        load_image(path);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::UnsupportedFormat);
    }
}

TEST_CASE("unwritable path fails with WriteFailed") {
    const GrayImage img(1, 1, 9);
    try {
        save_image(img, (test_dir() / "no_such_dir" / "x.pgm").string());
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.kind() == IoErrorKind::WriteFailed);
    }
}
