#pragma once

namespace wco {

inline constexpr const char* kCoreVersion = "0.1.0";

}  // namespace wco
