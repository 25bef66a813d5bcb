#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

/// Record of a (partial) truncation, used to lift and restrict colourings
/// and to invert the construction.
struct TruncationTrace {
  int source_order = 0;
  /// Truncated vertex -> its triangle. Slot k is attached to the k-th
  /// neighbour of the vertex in ascending order; slot 0 is the vertex itself.
  std::map<Vertex, std::array<Vertex, 3>> triangles;
  /// Each source edge -> the edge that replaces it in the truncated graph.
  std::map<Edge, Edge> edge_map;

  /// {"source_order": n, "triangles": {"v": [t0,t1,t2]}, "edges": [[[u,v],[a,b]], ...]}
  std::string to_json() const;
};

struct Truncation {
  Graph graph;
  TruncationTrace trace;
};

/// Replaces every vertex of `s` (each of degree 3) by a triangle. Untouched
/// vertices keep their ids; the i-th truncated vertex (ascending) keeps its
/// id as slot 0 and gains slots order + 2i and order + 2i + 1.
Truncation truncate_set(const Graph& g, const VertexSet& s);

/// T(g) for cubic g: order 3n, with vertex v's triangle {v, n+2v, n+2v+1}.
Graph truncate_full(const Graph& g);
Truncation truncate_full_traced(const Graph& g);

/// Graph on the triangles of `h`, triangles adjacent when an edge of `h`
/// joins them. Triangles are numbered by their smallest vertex, which makes
/// contract_triangles(truncate_full(g)) == g as labelled graphs. Throws
/// PreconditionError naming the offending structure when the triangles
/// overlap, miss a vertex, or two triangles are joined twice.
Graph contract_triangles(const Graph& h);

/// The cubic graph whose truncation is `h`, if any. Runs
/// truncated_shape_check first; a graph that passes it but cannot be
/// contracted raises CertificationError.
std::optional<Graph> recognize_truncation(const Graph& h);

/// Sound non-isomorphism test that also works above the canonical-labelling
/// budget: differing invariants, canonical forms, or (for truncations)
/// non-isomorphic contractions. Throws BudgetExceeded when undecided.
bool certified_non_isomorphic(const Graph& a, const Graph& b);

/// [(T(g), T(h)), ..., (T^k(g), T^k(h))] for cospectral non-isomorphic cubic
/// g and h, 1 <= k <= 3. Each pair is re-certified cospectral and
/// non-isomorphic; failure raises CertificationError.
std::vector<std::pair<Graph, Graph>> family_pairs(const Graph& g, const Graph& h, int k);

}  // namespace cubic
