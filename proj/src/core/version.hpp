#pragma once

namespace csforge {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace csforge
