#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubic/graph.hpp"
#include "cubic/truncation.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Edge colouring

/// colors[i] is the colour of g.edges()[i].
struct EdgeColoring {
  std::vector<int> colors;

  int color_count() const;
  /// Proper (incident edges differ) and total for g.
  bool valid_for(const Graph& g) const;
  /// [{"edge": [u, v], "color": k}, ...]
  std::string to_json(const Graph& g) const;
};

struct ChromaticIndexResult {
  int value = 0;
  EdgeColoring witness;
  /// Set when value is 4: the whole 3-colouring search space was explored.
  bool exhausted = false;
};

/// Chromatic index of a cubic graph (3 or 4). Exact DFS with forced-colour
/// propagation and most-constrained-edge ordering, run per component with
/// the first vertex's edges fixed to 0, 1, 2.
ChromaticIndexResult chromatic_index(const Graph& g);

/// A proper edge colouring with at most k colours, or nothing.
std::optional<EdgeColoring> edge_coloring(const Graph& g, int k);

/// Lifts a 3-edge-colouring of cubic g to T(g): replacement edges keep their
/// colour, and each triangle edge takes the colour of the edge meeting the
/// triangle at the opposite vertex.
EdgeColoring lift_coloring(const Graph& g, const EdgeColoring& c, const Truncation& t);

/// Reads the colours of the replacement edges of T(g) back onto g. A proper
/// 3-colouring of T(g) always restricts to a proper 3-colouring of g.
EdgeColoring restrict_coloring(const Graph& g, const EdgeColoring& c, const Truncation& t);

// ---------------------------------------------------------------------------
// Matchings

/// Maximum-cardinality matching (Edmonds blossom algorithm), sorted edges.
std::vector<Edge> maximum_matching(const Graph& g);

struct TutteSet {
  VertexSet barrier;
  /// Odd components of g - barrier.
  std::vector<VertexSet> odd_components;
};

/// Perfect matching, or a Tutte set with more odd components than vertices.
struct MatchingCertificate {
  std::variant<std::vector<Edge>, TutteSet> payload;

  bool has_perfect_matching() const { return payload.index() == 0; }
  /// Exact re-validation against g.
  bool valid_for(const Graph& g) const;
  /// {"kind": "matching"|"tutte", ...}
  std::string to_json() const;
};

/// For even order. The Tutte set is the Gallai-Edmonds barrier: neighbours of
/// the vertices reachable on even alternating paths from exposed vertices.
MatchingCertificate perfect_matching_certificate(const Graph& g);

// ---------------------------------------------------------------------------
// Hamiltonicity and vertex colouring

inline constexpr int kHamiltonBudget = 200;

/// Exact Hamiltonian cycle decision by backtracking.
bool is_hamiltonian(const Graph& g);
/// A Hamiltonian cycle as a vertex sequence starting at 0, or empty.
std::vector<Vertex> hamiltonian_cycle(const Graph& g);

/// Chromatic number of a cubic graph from its components: 4 for K4, 2 for
/// bipartite, 3 otherwise; the maximum over components.
int chromatic_number_cubic(const Graph& g);

inline constexpr int kChromaticNumberBudget = 24;

/// Exact chromatic number by increasing k with DSATUR backtracking.
int chromatic_number_small(const Graph& g);

/// Proper vertex colouring with at most k colours, or nothing.
std::optional<std::vector<int>> vertex_coloring(const Graph& g, int k);

}  // namespace cubic
