#pragma once

namespace numsemi {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace numsemi
