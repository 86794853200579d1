#pragma once

namespace ampcap {

inline constexpr const char* kVersion = "ampcap 0.1.0";

}
