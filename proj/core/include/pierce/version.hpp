#pragma once

namespace pierce {

inline constexpr const char* toolkit_version = "0.1.0";
inline constexpr int report_format_version = 1;

}  // namespace pierce
