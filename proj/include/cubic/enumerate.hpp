#pragma once

#include <functional>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

/// Largest order enumerate_cubic supports.
inline constexpr int kEnumerationLimit = 16;

/// One representative (in canonical labelling) per isomorphism class of
/// connected cubic graphs of order n, 4 <= n <= 16, n even. The sequence is
/// ordered by canonical graph6 key, so it is reproducible.
///
/// Graphs of order n are grown from order n - 2 by edge insertion: subdivide
/// two distinct edges and join the two new vertices. Parents are the
/// connected graphs of order n - 2 and the two-component unions of smaller
/// ones (joining across the components). Children are reduced to their
/// canonical form and deduplicated. Results are memoised per order.
const std::vector<Graph>& enumerate_cubic(int n);

/// All connected cubic graphs of every even order in [4, max_order].
std::vector<Graph> enumerate_cubic_up_to(int max_order);

}  // namespace cubic
