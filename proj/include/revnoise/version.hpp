#pragma once

namespace revnoise {

inline constexpr const char* kVersion = "0.1.0";

} // namespace revnoise
