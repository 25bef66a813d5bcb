#include "cubic/truncation.hpp"

#include <algorithm>

#include "json.hpp"

#include "cubic/canonical.hpp"
#include "cubic/errors.hpp"
#include "cubic/spectral.hpp"

namespace cubic {

std::string TruncationTrace::to_json() const {
  nlohmann::json tri = nlohmann::json::object();
  for (const auto& [v, t] : triangles) tri[std::to_string(v)] = {t[0], t[1], t[2]};
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [from, to] : edge_map) edges.push_back({{from.u, from.v}, {to.u, to.v}});
  return nlohmann::json{{"source_order", source_order}, {"triangles", tri}, {"edges", edges}}.dump();
}

Truncation truncate_set(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw PreconditionError("vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw PreconditionError("truncation set must be sorted and distinct");
    if (g.degree(s[i]) != 3)
      throw PreconditionError("vertex " + std::to_string(s[i]) + " has degree " +
                              std::to_string(g.degree(s[i])) + ", truncation needs degree 3");
  }

  Truncation out;
  out.trace.source_order = n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int extra = n + 2 * static_cast<int>(i);
    out.trace.triangles[s[i]] = {s[i], extra, extra + 1};
  }

  // The vertex that takes over the end of edge {v, w} at v.
  auto attach = [&](Vertex v, Vertex w) {
    auto it = out.trace.triangles.find(v);
    if (it == out.trace.triangles.end()) return v;
    auto nbrs = g.neighbors(v);
    auto slot = std::lower_bound(nbrs.begin(), nbrs.end(), w) - nbrs.begin();
    return it->second[slot];
  };

  std::vector<Edge> edges;
  edges.reserve(g.size() + 3 * s.size());
  for (const auto& [v, t] : out.trace.triangles) {
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[1], t[2]);
    edges.emplace_back(t[0], t[2]);
  }
  for (const Edge& e : g.edges()) {
    Edge replaced(attach(e.u, e.v), attach(e.v, e.u));
    edges.push_back(replaced);
    out.trace.edge_map[e] = replaced;
  }
  out.graph = Graph(n + 2 * static_cast<int>(s.size()), std::move(edges));
  return out;
}

Truncation truncate_full_traced(const Graph& g) {
  if (!g.is_cubic()) throw PreconditionError("full truncation needs a cubic graph");
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return truncate_set(g, all);
}

Graph truncate_full(const Graph& g) { return truncate_full_traced(g).graph; }

Graph contract_triangles(const Graph& h) {
  if (!h.is_cubic()) throw PreconditionError("triangle contraction needs a cubic graph");
  const int n = h.order();
  std::vector<std::array<Vertex, 3>> triangles;
  std::vector<int> owner(n, -1);
  for (const Edge& e : h.edges()) {
    for (Vertex w : h.neighbors(e.u)) {
      if (w <= e.v || !h.adjacent(e.v, w)) continue;
      const std::array<Vertex, 3> t{e.u, e.v, w};
      const int id = static_cast<int>(triangles.size());
      for (Vertex x : t) {
        if (owner[x] >= 0) {
          const auto& other = triangles[owner[x]];
          throw PreconditionError("triangles {" + std::to_string(other[0]) + "," + std::to_string(other[1]) +
                                  "," + std::to_string(other[2]) + "} and {" + std::to_string(t[0]) + "," +
                                  std::to_string(t[1]) + "," + std::to_string(t[2]) + "} overlap at vertex " +
                                  std::to_string(x));
        }
        owner[x] = id;
      }
      triangles.push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0) throw PreconditionError("vertex " + std::to_string(v) + " lies on no triangle");

  // Triangles were found in order of their smallest vertex.
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (owner[e.u] == owner[e.v]) continue;
    edges.emplace_back(owner[e.u], owner[e.v]);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    const auto& a = triangles[dup->u];
    const auto& b = triangles[dup->v];
    throw PreconditionError("triangles at " + std::to_string(a[0]) + " and " + std::to_string(b[0]) +
                            " are joined by more than one edge");
  }
  return Graph(static_cast<int>(triangles.size()), std::move(edges));
}

std::optional<Graph> recognize_truncation(const Graph& h) {
  if (!truncated_shape_check(h)) return std::nullopt;
  try {
    return contract_triangles(h);
  } catch (const PreconditionError& e) {
    throw CertificationError(std::string("graph passes the truncation shape check but does not contract: ") +
                             e.what());
  }
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// Colour refinement on the disjoint union separates a and b when the two
// halves end with different colour histograms.
bool refinement_separates(const Graph& a, const Graph& b) {
  Graph both = disjoint_union(a, b);
  std::vector<int> colors(both.order());
  for (Vertex v = 0; v < both.order(); ++v) colors[v] = both.degree(v);
  colors = refine_colors(both, std::move(colors));
  std::vector<int> left(colors.begin(), colors.begin() + a.order());
  std::vector<int> right(colors.begin() + a.order(), colors.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left != right;
}

}  // namespace

bool certified_non_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return true;
  if (sorted_degrees(a) != sorted_degrees(b)) return true;
  if (triangle_count(a) != triangle_count(b)) return true;
  if (a.order() <= kCanonicalBudget) return !is_isomorphic(a, b);
  if (refinement_separates(a, b)) return true;
  // Triangle contraction is isomorphism-invariant, so T(x) = T(y) forces x = y.
  auto pa = recognize_truncation(a);
  auto pb = recognize_truncation(b);
  if (pa.has_value() != pb.has_value()) return true;
  if (pa && pb) return certified_non_isomorphic(*pa, *pb);
  throw BudgetExceeded("cannot certify non-isomorphism of two graphs of order " + std::to_string(a.order()));
}

std::vector<std::pair<Graph, Graph>> family_pairs(const Graph& g, const Graph& h, int k) {
  if (k < 1 || k > 3) throw PreconditionError("family iteration count must be in [1, 3]");
  if (!g.is_cubic() || !h.is_cubic()) throw PreconditionError("family seeds must be cubic");
  if (!are_cospectral(g, h)) throw PreconditionError("family seeds must be cospectral");
  if (!certified_non_isomorphic(g, h)) throw PreconditionError("family seeds must be non-isomorphic");

  std::vector<std::pair<Graph, Graph>> out;
  Graph a = g;
  Graph b = h;
  for (int step = 1; step <= k; ++step) {
    a = truncate_full(a);
    b = truncate_full(b);
    if (!are_cospectral(a, b))
      throw CertificationError("truncation step " + std::to_string(step) + " broke cospectrality");
    if (!certified_non_isomorphic(a, b))
      throw CertificationError("truncation step " + std::to_string(step) + " produced isomorphic graphs");
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace cubic
