#pragma once

namespace edwards {

// Bump ENGINE_VERSION on any change that can alter certificate content;
// cached certificates are keyed by it. SCHEMA_VERSION tracks the JSON layout.
inline constexpr int ENGINE_VERSION = 1;
inline constexpr int SCHEMA_VERSION = 1;

} // namespace edwards
