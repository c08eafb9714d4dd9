#pragma once

namespace sphandle {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sphandle
