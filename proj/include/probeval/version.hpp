#pragma once

namespace probeval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace probeval
