#pragma once

namespace baconf {

inline constexpr const char* version = "0.1.0";

}  // namespace baconf
