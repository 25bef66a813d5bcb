#include "cubic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

Graph::Graph(int order) : order_(order), adj_(order > 0 ? order : 0) {
  if (order < 0) throw PreconditionError("graph order must be non-negative");
}

Graph::Graph(int order, std::vector<Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order)
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for order " + std::to_string(order));
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw PreconditionError("duplicate edge {" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order_ || b >= order_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::edge_index(Vertex a, Vertex b) const {
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_regular(int k) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [k](const auto& list) { return static_cast<int>(list.size()) == k; });
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const Graph& g) {
  auto ids = component_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<VertexSet> components(const Graph& g) {
  auto ids = component_ids(g);
  std::vector<VertexSet> out(component_count(g));
  for (Vertex v = 0; v < g.order(); ++v) out[ids[v]].push_back(v);
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    // Count common neighbours w > v so each triangle u<v<w is seen once.
    for (Vertex w : a)
      if (w > e.v && std::binary_search(b.begin(), b.end(), w)) ++count;
  }
  return count;
}

bool has_four_cycle(const Graph& g) {
  // A 4-cycle exists iff two distinct vertices share two common neighbours.
  std::vector<int> seen(g.order(), -1);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex m : g.neighbors(a)) {
      for (Vertex b : g.neighbors(m)) {
        if (b <= a) continue;
        if (seen[b] == a) return true;
        seen[b] = a;
      }
    }
  }
  return false;
}

std::int64_t closed_walks(const Graph& g, int k) {
  switch (k) {
    case 2:
      return 2 * static_cast<std::int64_t>(g.size());
    case 3:
      return 6 * triangle_count(g);
    case 4: {
      // trace(A^4) = sum over (i, j) of (A^2)_{ij}^2.
      std::int64_t total = 0;
      std::vector<std::int64_t> row(g.order());
      for (Vertex i = 0; i < g.order(); ++i) {
        std::fill(row.begin(), row.end(), 0);
        for (Vertex m : g.neighbors(i))
          for (Vertex j : g.neighbors(m)) ++row[j];
        for (auto x : row) total += x * x;
      }
      return total;
    }
    default:
      throw PreconditionError("closed_walks supports k in {2,3,4}, got " + std::to_string(k));
  }
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw PreconditionError("permutation size does not match graph order");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

Graph remove_vertex(const Graph& g, Vertex v) {
  VertexSet keep;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
  Graph out;
  for (const Graph& p : parts) out = disjoint_union(out, p);
  return out;
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  // Edges sharing vertex v form a clique in the line graph.
  std::vector<std::vector<int>> incident(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    incident[g.edges()[i].u].push_back(static_cast<int>(i));
    incident[g.edges()[i].v].push_back(static_cast<int>(i));
  }
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
  return Graph(static_cast<int>(g.size()), std::move(edges));
}

Graph subdivision(const Graph& g) {
  std::vector<Edge> edges;
  int next = g.order();
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, next);
    edges.emplace_back(e.v, next);
    ++next;
  }
  return Graph(next, std::move(edges));
}

Graph bipartite_double(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(e.v, n + e.u);
  }
  return Graph(2 * n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

namespace {

// K4 minus {0,1}, with the apex 4 joined to 0 and 1. Vertex 4 has degree 2.
Graph small_f() {
  return Graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
}

// Two copies of F on 0..4 and 5..9; the middle vertex 10 joins the apexes 4 and 9.
Graph small_f_prime() {
  Graph two = disjoint_union(small_f(), small_f());
  std::vector<Edge> edges = two.edges();
  edges.emplace_back(4, 10);
  edges.emplace_back(9, 10);
  return Graph(11, std::move(edges));
}

// F on 0..4 and F' on 5..15; the edge {4, 15} joins their degree-2 vertices.
Graph small_f_double_prime() {
  Graph both = disjoint_union(small_f(), small_f_prime());
  std::vector<Edge> edges = both.edges();
  edges.emplace_back(4, 15);
  return Graph(16, std::move(edges));
}

}  // namespace

Graph catalog(std::string_view name) {
  if (name == "K4") return complete_graph(4);
  if (name == "K33") {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
    return Graph(6, std::move(edges));
  }
  if (name == "prism")
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "cube") {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
      for (int bit = 1; bit < 8; bit <<= 1)
        if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
    return Graph(8, std::move(edges));
  }
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(edges));
  }
  if (name == "F") return small_f();
  if (name == "Fprime") return small_f_prime();
  if (name == "Fdoubleprime") return small_f_double_prime();
  throw PreconditionError("unknown catalog graph '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"K4", "K33", "prism", "cube", "petersen", "F", "Fprime", "Fdoubleprime"};
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  int order = -1;
  int largest = -1;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto parse_int = [&](std::string_view tok, std::size_t at) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw ParseError("bad vertex index '" + std::string(tok) + "'", at);
    return value;
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t line_start = pos;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with("# order ")) {
      order = parse_int(line.substr(8), line_start + 8);
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    std::size_t space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError("expected 'u v'", line_start);
    int u = parse_int(line.substr(0, space), line_start);
    int v = parse_int(line.substr(space + 1), line_start + space + 1);
    largest = std::max({largest, u, v});
    edges.emplace_back(u, v);
  }
  if (order < 0) order = largest + 1;
  if (largest >= order) throw ParseError("edge endpoint exceeds declared order", 0);
  return Graph(order, std::move(edges));
}

}  // namespace cubic
