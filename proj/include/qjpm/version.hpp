#pragma once

namespace qjpm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qjpm
