#pragma once

#include <cstdint>
#include <limits>

namespace domset {

/// Internal 0-based vertex id.
using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

} // namespace domset
