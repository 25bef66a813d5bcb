#include <algorithm>
#include <bit>

#include "json.hpp"

#include "cubic/errors.hpp"
#include "cubic/matchcolor.hpp"

namespace cubic {

int EdgeColoring::color_count() const {
  int top = -1;
  for (int c : colors) top = std::max(top, c);
  return top + 1;
}

bool EdgeColoring::valid_for(const Graph& g) const {
  if (colors.size() != g.size()) return false;
  std::vector<std::vector<int>> seen(g.order());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 0) return false;
    for (Vertex v : {g.edges()[i].u, g.edges()[i].v}) {
      auto& list = seen[v];
      if (std::find(list.begin(), list.end(), colors[i]) != list.end()) return false;
      list.push_back(colors[i]);
    }
  }
  return true;
}

std::string EdgeColoring::to_json(const Graph& g) const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < colors.size() && i < g.size(); ++i)
    out.push_back({{"edge", {g.edges()[i].u, g.edges()[i].v}}, {"color", colors[i]}});
  return out.dump();
}

namespace {

// Backtracking k-edge-colouring of the edges in `scope`. used[v] is the
// bitmask of colours present at v. Most-constrained edge first, so an edge
// with a single remaining colour is always assigned before branching.
class EdgeColorSearch {
 public:
  EdgeColorSearch(const Graph& g, int k) : g_(g), k_(k), full_((1u << k) - 1), used_(g.order(), 0) {
    colors_.assign(g.size(), -1);
  }

  bool color_scope(const std::vector<int>& scope) {
    pending_ = scope;
    return dfs();
  }

  void assign(int e, int c) {
    colors_[e] = c;
    used_[g_.edges()[e].u] |= 1u << c;
    used_[g_.edges()[e].v] |= 1u << c;
  }

  const std::vector<int>& colors() const { return colors_; }

 private:
  unsigned domain(int e) const {
    const Edge& edge = g_.edges()[e];
    return full_ & ~(used_[edge.u] | used_[edge.v]);
  }

  bool dfs() {
    int best = -1;
    int best_size = k_ + 1;
    for (int e : pending_) {
      if (colors_[e] >= 0) continue;
      const int size = std::popcount(domain(e));
      if (size < best_size) {
        best = e;
        best_size = size;
        if (size == 0) return false;
      }
    }
    if (best < 0) return true;
    const Edge& edge = g_.edges()[best];
    for (unsigned dom = domain(best); dom; dom &= dom - 1) {
      const int c = std::countr_zero(dom);
      assign(best, c);
      if (dfs()) return true;
      colors_[best] = -1;
      used_[edge.u] &= ~(1u << c);
      used_[edge.v] &= ~(1u << c);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  unsigned full_;
  std::vector<unsigned> used_;
  std::vector<int> colors_;
  std::vector<int> pending_;
};

}  // namespace

std::optional<EdgeColoring> edge_coloring(const Graph& g, int k) {
  if (k < 0 || k > 16) throw PreconditionError("edge_coloring supports at most 16 colours");
  if (g.size() > 0 && g.max_degree() > k) return std::nullopt;
  EdgeColorSearch search(g, k);
  auto ids = component_ids(g);
  for (const VertexSet& comp : components(g)) {
    std::vector<int> scope;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (ids[g.edges()[i].u] == ids[comp.front()]) scope.push_back(static_cast<int>(i));
    if (scope.empty()) continue;
    // Colours are interchangeable: fix the edges at the first vertex.
    int next_color = 0;
    for (Vertex w : g.neighbors(comp.front()))
      search.assign(g.edge_index(comp.front(), w), next_color++);
    if (!search.color_scope(scope)) return std::nullopt;
  }
  return EdgeColoring{search.colors()};
}

ChromaticIndexResult chromatic_index(const Graph& g) {
  if (!g.is_cubic()) throw PreconditionError("chromatic_index needs a cubic graph");
  ChromaticIndexResult out;
  if (auto three = edge_coloring(g, 3)) {
    out.value = 3;
    out.witness = std::move(*three);
    return out;
  }
  out.exhausted = true;
  auto four = edge_coloring(g, 4);
  if (!four) throw CertificationError("cubic graph without a 4-edge-colouring");
  out.value = 4;
  out.witness = std::move(*four);
  return out;
}

EdgeColoring lift_coloring(const Graph& g, const EdgeColoring& c, const Truncation& t) {
  if (!g.is_cubic()) throw PreconditionError("colouring lift needs a cubic graph");
  if (!c.valid_for(g) || c.color_count() > 3)
    throw PreconditionError("colouring lift needs a proper 3-edge-colouring");
  if (static_cast<int>(t.trace.triangles.size()) != g.order() || t.trace.source_order != g.order())
    throw PreconditionError("trace does not come from a full truncation of this graph");

  const Graph& tg = t.graph;
  EdgeColoring out{std::vector<int>(tg.size(), -1)};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& replaced = t.trace.edge_map.at(g.edges()[i]);
    out.colors[tg.edge_index(replaced.u, replaced.v)] = c.colors[i];
  }
  for (const auto& [v, tri] : t.trace.triangles) {
    auto nbrs = g.neighbors(v);
    for (int opposite = 0; opposite < 3; ++opposite) {
      const int color = c.colors[g.edge_index(v, nbrs[opposite])];
      const Vertex a = tri[(opposite + 1) % 3];
      const Vertex b = tri[(opposite + 2) % 3];
      out.colors[tg.edge_index(a, b)] = color;
    }
  }
  if (!out.valid_for(tg)) throw CertificationError("lifted colouring is not proper");
  return out;
}

EdgeColoring restrict_coloring(const Graph& g, const EdgeColoring& c, const Truncation& t) {
  if (c.colors.size() != t.graph.size()) throw PreconditionError("colouring does not match the truncated graph");
  EdgeColoring out{std::vector<int>(g.size(), -1)};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& replaced = t.trace.edge_map.at(g.edges()[i]);
    out.colors[i] = c.colors[t.graph.edge_index(replaced.u, replaced.v)];
  }
  return out;
}

}  // namespace cubic
