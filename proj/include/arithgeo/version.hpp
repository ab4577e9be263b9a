#pragma once

namespace arithgeo {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace arithgeo
