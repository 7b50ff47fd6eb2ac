#pragma once

namespace sfdr {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sfdr
