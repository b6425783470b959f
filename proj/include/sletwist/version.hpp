#pragma once

namespace sletwist {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sletwist
