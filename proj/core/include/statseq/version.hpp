#pragma once

namespace statseq {

inline constexpr const char* kToolName = "statseq";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace statseq
