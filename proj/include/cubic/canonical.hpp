#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

/// Largest order canonical_form accepts.
inline constexpr int kCanonicalBudget = 64;

/// Isomorphism-class representative: equal labels iff isomorphic graphs.
struct CanonicalLabel {
  int order = 0;
  std::vector<Edge> edges;

  Graph graph() const { return Graph(order, edges); }
  /// graph6 text of the canonical graph, usable as a hash key.
  std::string key() const;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct Canonization {
  CanonicalLabel label;
  /// position[v] is the canonical index of vertex v.
  std::vector<Vertex> position;
  /// Automorphisms found during the search (not necessarily a full
  /// generating set); each maps v to perm[v].
  std::vector<std::vector<Vertex>> automorphisms;
};

/// Individualization-refinement search. Throws BudgetExceeded above
/// kCanonicalBudget vertices.
Canonization canonize(const Graph& g);
CanonicalLabel canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Stable colour-refinement classes (1-dimensional Weisfeiler-Leman).
/// Class ids are isomorphism-invariant and ordered; any order.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

}  // namespace cubic
