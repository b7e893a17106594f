#pragma once

namespace srsphere {

inline constexpr const char* kToolName = "srsphere";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace srsphere
