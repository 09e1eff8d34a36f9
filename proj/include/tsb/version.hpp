#pragma once

namespace tsb {

inline constexpr const char* kVersion = "1.0.0";

} // namespace tsb
