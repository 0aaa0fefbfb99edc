#pragma once

namespace lbmtest {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lbmtest
