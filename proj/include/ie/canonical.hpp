#pragma once

#include <cstdint>
#include <vector>

#include "ie/graph.hpp"

namespace ie {

// Canonical vertex ordering: order[pos] is the original vertex placed at
// canonical position pos. Two graphs (with matching vertex colors) receive
// the same certificate iff they are color-preserving isomorphic. Exact;
// intended for desk-scale graphs (K <= 12 or so).
//
// `colors` is empty or one integer per vertex; colored vertices are only
// interchangeable with vertices of the same color.
std::vector<int> canonical_order(const Graph& g, const std::vector<int>& colors = {});

std::vector<std::uint8_t> canonical_certificate(const Graph& g,
                                                const std::vector<int>& colors = {});

}  // namespace ie
