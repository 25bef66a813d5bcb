#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubic {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on the vertices 0..order-1.
///
/// Edges are kept sorted, so two graphs compare equal iff they are equal as
/// labelled graphs. Adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws PreconditionError on loops, duplicate edges or bad endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  bool adjacent(Vertex a, Vertex b) const;
  /// Index of the edge {a, b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  bool is_regular(int k) const;
  bool is_cubic() const { return is_regular(3); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Structure queries.

/// Component id per vertex, numbered in order of smallest member.
std::vector<int> component_ids(const Graph& g);
int component_count(const Graph& g);
/// Vertex sets of the components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_bipartite(const Graph& g);
std::int64_t triangle_count(const Graph& g);
bool has_four_cycle(const Graph& g);

/// trace(A^k) for k in {2,3,4}, exact.
std::int64_t closed_walks(const Graph& g, int k);

// Constructions. Labelling of every result is documented and deterministic.

/// Vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Subgraph induced on `keep` (sorted); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph remove_vertex(const Graph& g, Vertex v);
/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_union(std::initializer_list<Graph> parts);
/// Vertex i of the result is edges()[i] of g.
Graph line_graph(const Graph& g);
/// Original vertices keep their ids; edge i of g gets the new vertex order+i.
Graph subdivision(const Graph& g);
/// (v, 0) is v and (v, 1) is order + v.
Graph bipartite_double(const Graph& g);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Named graphs: K4, K33, prism, cube, petersen, F, Fprime, Fdoubleprime.
Graph catalog(std::string_view name);
std::vector<std::string> catalog_names();

// Edge-list text: one "u v" pair per line, 0-based. Lines starting with '#'
// are comments, except "# order N" which fixes the order (otherwise the
// largest endpoint + 1).
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace cubic
