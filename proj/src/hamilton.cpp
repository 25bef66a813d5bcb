#include <algorithm>

#include "cubic/errors.hpp"
#include "cubic/matchcolor.hpp"

namespace cubic {

namespace {

// Extends a path that starts at vertex 0. Before each step every unvisited
// vertex must keep two usable cycle neighbours (unvisited ones or the two
// path ends), and at most one of them may depend on the current end.
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.order()), visited_(n_, 0) {}

  std::vector<Vertex> run() {
    path_.push_back(0);
    visited_[0] = 1;
    if (extend()) return path_;
    return {};
  }

 private:
  bool extend() {
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(end, 0);

    Vertex forced = -1;
    for (Vertex x = 0; x < n_; ++x) {
      if (visited_[x]) continue;
      int free = 0;
      bool touches_end = false;
      for (Vertex y : g_.neighbors(x)) {
        if (!visited_[y]) {
          ++free;
        } else if (y == end) {
          ++free;
          touches_end = true;
        } else if (y == 0 && path_.size() > 1) {
          ++free;
        }
      }
      if (free < 2) return false;
      if (free == 2 && touches_end && path_.size() > 1 && static_cast<int>(path_.size()) + 1 < n_) {
        if (forced >= 0) return false;
        forced = x;
      }
    }
    if (!reachable()) return false;

    for (Vertex w : g_.neighbors(end)) {
      if (visited_[w] || (forced >= 0 && w != forced)) continue;
      visited_[w] = 1;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      visited_[w] = 0;
    }
    return false;
  }

  // All unvisited vertices are reachable from the path end through
  // unvisited vertices.
  bool reachable() {
    const Vertex end = path_.back();
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{end};
    seen[end] = 1;
    int count = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (seen[w] || visited_[w]) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count == n_ - static_cast<int>(path_.size());
  }

  const Graph& g_;
  int n_;
  std::vector<char> visited_;
  std::vector<Vertex> path_;
};

}  // namespace

std::vector<Vertex> hamiltonian_cycle(const Graph& g) {
  if (g.order() > kHamiltonBudget)
    throw BudgetExceeded("Hamiltonicity budget is " + std::to_string(kHamiltonBudget) + " vertices");
  if (g.order() < 3 || component_count(g) != 1) return {};
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return {};
  return HamiltonSearch(g).run();
}

bool is_hamiltonian(const Graph& g) { return !hamiltonian_cycle(g).empty(); }

int chromatic_number_cubic(const Graph& g) {
  if (!g.is_cubic() || g.order() == 0) throw PreconditionError("chromatic_number_cubic needs a non-empty cubic graph");
  int best = 0;
  for (const VertexSet& comp : components(g)) {
    Graph part = induced_subgraph(g, comp);
    int value = 3;
    if (part.order() == 4) {
      value = 4;  // the only cubic graph on 4 vertices is K4
    } else if (is_bipartite(part)) {
      value = 2;
    }
    best = std::max(best, value);
  }
  return best;
}

namespace {

// DSATUR-ordered backtracking; a vertex may open at most one new colour.
class VertexColorSearch {
 public:
  VertexColorSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool run() { return dfs(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool dfs(int colored, int used) {
    if (colored == g_.order()) return true;
    Vertex pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      unsigned mask = 0;
      for (Vertex w : g_.neighbors(v))
        if (color_[w] >= 0) mask |= 1u << color_[w];
      const int sat = __builtin_popcount(mask);
      if (sat > pick_sat || (sat == pick_sat && g_.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g_.degree(v);
      }
    }
    unsigned forbidden = 0;
    for (Vertex w : g_.neighbors(pick))
      if (color_[w] >= 0) forbidden |= 1u << color_[w];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & (1u << c)) continue;
      color_[pick] = c;
      if (dfs(colored + 1, std::max(used, c + 1))) return true;
      color_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

std::optional<std::vector<int>> vertex_coloring(const Graph& g, int k) {
  if (k > 31) throw PreconditionError("vertex_coloring supports at most 31 colours");
  VertexColorSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return search.colors();
}

int chromatic_number_small(const Graph& g) {
  if (g.order() > kChromaticNumberBudget)
    throw BudgetExceeded("chromatic number budget is " + std::to_string(kChromaticNumberBudget) + " vertices");
  for (int k = 0; k <= g.order(); ++k)
    if (vertex_coloring(g, k)) return k;
  return g.order();
}

}  // namespace cubic
