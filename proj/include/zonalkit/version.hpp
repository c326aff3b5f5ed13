#pragma once

namespace zonalkit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace zonalkit
