#pragma once

namespace besselsub {
inline constexpr const char* kVersion = "0.1.0";
}
