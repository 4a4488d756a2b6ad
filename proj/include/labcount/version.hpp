#pragma once

namespace labcount {

// Embedded in every report; never a timestamp, so reports stay byte-reproducible.
inline constexpr const char* kVersion = "labcount 0.1.0";

}  // namespace labcount
