#pragma once

namespace jumploci {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jumploci
