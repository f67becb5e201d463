#pragma once

namespace zdg {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace zdg
