#pragma once

namespace repknot {

inline constexpr const char* kVersion = "repknot 0.1.0";

}  // namespace repknot
