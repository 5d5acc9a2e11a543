#pragma once

namespace paramp {

inline constexpr const char* kVersion = "1.0.0";

} // namespace paramp
