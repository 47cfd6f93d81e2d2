#pragma once

namespace tautring {

inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace tautring
