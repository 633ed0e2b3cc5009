#pragma once

namespace swarmseg {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace swarmseg
