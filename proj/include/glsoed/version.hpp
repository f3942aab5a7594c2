#pragma once

namespace glsoed {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace glsoed
