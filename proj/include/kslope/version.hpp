#pragma once

namespace kslope {

inline constexpr const char* engine_name = "kslope";
inline constexpr const char* engine_version = "0.1.0";

} // namespace kslope
