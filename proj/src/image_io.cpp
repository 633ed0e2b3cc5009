#include "swarmseg/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace swarmseg {

namespace {

// Netpbm token scanner: skips whitespace and '#' comment lines.
bool next_token(std::istream& in, std::string& tok) {
    tok.clear();
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF)
        return false;
    while (c != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c == '#')
        in.unget();
    return true;
}

int parse_dim(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw IoError(IoErrorKind::MalformedHeader, "malformed " + what + " field '" + tok + "'");
    }
}

struct PnmHeader {
    std::string magic;
    int width = 0;
    int height = 0;
};

// Reads magic/width/height/maxval and consumes the single whitespace
// separating the header from the raw payload.
PnmHeader read_pnm_header(std::istream& in, const std::string& path) {
    PnmHeader h;
    std::string tok;
    if (!next_token(in, tok))
        throw IoError(IoErrorKind::MalformedHeader, path + ": empty file");
    h.magic = tok;
    if (!next_token(in, tok))
        throw IoError(IoErrorKind::MalformedHeader, path + ": missing width");
    h.width = parse_dim(tok, "width");
    if (!next_token(in, tok))
        throw IoError(IoErrorKind::MalformedHeader, path + ": missing height");
    h.height = parse_dim(tok, "height");
    if (!next_token(in, tok))
        throw IoError(IoErrorKind::MalformedHeader, path + ": missing maxval");
    if (tok != "255")
        throw IoError(IoErrorKind::UnsupportedMaxval, path + ": maxval " + tok + " not supported (expected 255)");
    return h;
}

void read_payload(std::istream& in, std::vector<std::uint8_t>& out, std::size_t n, const std::string& path) {
    out.resize(n);
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw IoError(IoErrorKind::UnexpectedEof, path + ": unexpected end of data");
}

bool has_png_signature(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char sig[8] = {};
    in.read(reinterpret_cast<char*>(sig), 8);
    return in.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};

GrayImage load_png_gray(const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.c_str(), "rb"));
    if (!fp)
        throw IoError(IoErrorKind::FileMissing, path + ": cannot open");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(IoErrorKind::MalformedHeader, path + ": libpng init failed");
    }

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> rows;

    // setjmp covers libpng-internal failures only; format checks below run in
    // normal control flow and throw after cleanup.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(IoErrorKind::MalformedHeader, path + ": corrupt PNG");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);
    if (color_type != PNG_COLOR_TYPE_GRAY || bit_depth != 8) {
        const std::string msg =
            color_type != PNG_COLOR_TYPE_GRAY
                ? path + ": unsupported format (PNG is not grayscale)"
                : path + ": unsupported format (PNG bit depth " + std::to_string(bit_depth) + ")";
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(IoErrorKind::UnsupportedFormat, msg);
    }

    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    pixels.resize(static_cast<std::size_t>(width) * height);

    rows.resize(height);
    for (int y = 0; y < height; ++y)
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * width;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayImage out(width, height);
    out.data = std::move(pixels);
    return out;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError(IoErrorKind::WriteFailed, path + ": cannot open for writing");
    return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out)
        throw IoError(IoErrorKind::WriteFailed, path + ": write failed");
}

} // namespace

GrayImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(IoErrorKind::FileMissing, path + ": no such file");
    if (has_png_signature(path))
        return load_png_gray(path);

    PnmHeader h = read_pnm_header(in, path);
    if (h.magic != "P5") {
        throw IoError(IoErrorKind::UnsupportedFormat,
                      path + ": unsupported format '" + h.magic + "' (expected P5)");
    }
    GrayImage img(h.width, h.height);
    read_payload(in, img.data, img.pixel_count(), path);
    return img;
}

RgbImage load_rgb_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(IoErrorKind::FileMissing, path + ": no such file");
    PnmHeader h = read_pnm_header(in, path);
    if (h.magic != "P6") {
        throw IoError(IoErrorKind::UnsupportedFormat,
                      path + ": unsupported format '" + h.magic + "' (expected P6)");
    }
    RgbImage img(h.width, h.height);
    read_payload(in, img.data, 3 * img.pixel_count(), path);
    return img;
}

void save_image(const GrayImage& image, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    finish_write(out, path);
}

void save_image(const BinaryMask& mask, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(mask.data.data()),
              static_cast<std::streamsize>(mask.data.size()));
    finish_write(out, path);
}

void save_image(const RgbImage& image, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.data.data()),
              static_cast<std::streamsize>(image.data.size()));
    finish_write(out, path);
}

} // namespace swarmseg
