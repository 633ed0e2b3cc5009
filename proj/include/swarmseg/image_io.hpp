#pragma once

#include <stdexcept>
#include <string>

#include "swarmseg/image.hpp"

namespace swarmseg {

enum class IoErrorKind {
    FileMissing,
    MalformedHeader,
    UnsupportedFormat, // wrong magic, color PGM/PPM mismatch, non-grayscale PNG
    UnsupportedMaxval, // PGM/PPM maxval != 255
    UnexpectedEof,     // truncated pixel payload
    WriteFailed,
};

class IoError : public std::runtime_error {
public:
    IoError(IoErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    IoErrorKind kind() const { return kind_; }

private:
    IoErrorKind kind_;
};

/// Reads a binary PGM (P5, maxval 255) or an 8-bit grayscale PNG.
/// Stored intensities are returned verbatim; '#' comments in PGM headers are accepted.
GrayImage load_image(const std::string& path);

/// Reads a binary PPM (P6, maxval 255).
RgbImage load_rgb_image(const std::string& path);

/// Writers emit the exact headers "P5\n<w> <h>\n255\n" / "P6\n<w> <h>\n255\n"
/// followed by raw payload bytes, so outputs are byte-stable.
void save_image(const GrayImage& image, const std::string& path);
void save_image(const BinaryMask& mask, const std::string& path);
void save_image(const RgbImage& image, const std::string& path);

} // namespace swarmseg
