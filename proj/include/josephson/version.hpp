#pragma once

namespace josephson {

inline constexpr const char* kProgramName = "josephson-lab";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace josephson
