#pragma once

namespace orbitdist {

inline constexpr const char* kVersion = "orbitdist 0.1.0";

}  // namespace orbitdist
