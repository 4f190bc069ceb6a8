#pragma once

#include <string>
#include <vector>

#include "cpss/harness.hpp"

namespace cpss::svg {

// Grouped bar chart of per-cell collision rates, the unshielded bar next
// to its shielded counterpart. Pure string rendering, deterministic.
std::string render_collision_chart(const std::vector<harness::CellSummary>& cells);

} // namespace cpss::svg
