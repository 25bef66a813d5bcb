#pragma once

#include <random>

#include "cubic/graph.hpp"

namespace cubic {

/// Uniform simple d-regular graph on n vertices from the pairing model with
/// rejection. n * d must be even and d < n.
Graph random_regular_graph(int n, int d, std::mt19937_64& rng);

/// Random connected cubic graph of even order n >= 4.
Graph random_connected_cubic(int n, std::mt19937_64& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Uniformly random relabelling.
Graph shuffle_labels(const Graph& g, std::mt19937_64& rng);

}  // namespace cubic
