#pragma once

namespace ineq {

inline constexpr const char* library_version = "0.1.0";

}
