#pragma once

namespace hdv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hdv
