#pragma once

namespace gotz {

inline constexpr const char* version = "1.0.0";

} // namespace gotz
