#pragma once

namespace orbitkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orbitkit
