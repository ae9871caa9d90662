#pragma once

namespace qhorn {
inline constexpr const char* kVersion = "0.1.0";
}
