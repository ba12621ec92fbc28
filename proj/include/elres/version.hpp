#pragma once

namespace elres {
inline constexpr const char* kVersion = "0.3.0";
}
