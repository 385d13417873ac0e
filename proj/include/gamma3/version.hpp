#pragma once

namespace gamma3 {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gamma3
