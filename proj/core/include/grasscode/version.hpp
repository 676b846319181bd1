#pragma once

namespace grasscode {

inline constexpr const char* version = "0.1.0";

} // namespace grasscode
