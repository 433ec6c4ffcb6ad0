#pragma once

namespace fofana {

inline constexpr const char* kToolName = "fofana-kit";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace fofana
