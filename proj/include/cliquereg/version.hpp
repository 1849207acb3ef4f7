#pragma once

namespace cliquereg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cliquereg
