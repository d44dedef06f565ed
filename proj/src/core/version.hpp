#pragma once

namespace scg {

inline constexpr const char* kToolName = "scg-toolkit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace scg
