#pragma once

namespace dgp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dgp
