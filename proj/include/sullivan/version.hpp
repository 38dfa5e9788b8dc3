#pragma once

namespace sullivan {
inline constexpr const char* kToolName = "sullivan";
inline constexpr const char* kToolVersion = "0.1.0";
}  // namespace sullivan
