#include "cubic/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cubic/errors.hpp"
#include "cubic/graph6.hpp"

namespace cubic {

std::string CanonicalLabel::key() const { return write_graph6(graph()); }

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  if (n == 0) return colors;
  std::vector<int> order(n);
  std::vector<std::vector<int>> sig(n);
  int classes = -1;
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(colors[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    colors = std::move(next);
    if (rank + 1 == classes) break;
    classes = rank + 1;
  }
  return colors;
}

namespace {

using Rows = std::vector<std::uint64_t>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  Canonization run() {
    std::vector<int> colors(n_);
    // Degree is a free first invariant.
    for (Vertex v = 0; v < n_; ++v) colors[v] = g_.degree(v);
    search(std::move(colors));

    Canonization out;
    out.position = best_position_;
    out.label.order = n_;
    for (const Edge& e : g_.edges())
      out.label.edges.emplace_back(best_position_[e.u], best_position_[e.v]);
    std::sort(out.label.edges.begin(), out.label.edges.end());
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

 private:
  void search(std::vector<int> colors) {
    colors = refine_colors(g_, std::move(colors));

    // Target cell: smallest non-singleton, lowest colour on ties.
    std::vector<int> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    if (target < 0) {
      leaf(colors);
      return;
    }

    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (colors[w] != target) continue;
      if (equivalent_to_explored(w, explored)) continue;
      explored.push_back(w);
      std::vector<int> child(n_);
      for (Vertex v = 0; v < n_; ++v) child[v] = 2 * colors[v] + (colors[v] == target && v != w);
      prefix_.push_back(w);
      search(std::move(child));
      prefix_.pop_back();
    }
  }

  // True if w lies in the orbit of an explored sibling under the group
  // generated by known automorphisms fixing the current prefix pointwise.
  bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored) {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& perm : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex p) { return perm[p] == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(perm[v]);
    }
    if (!any) return false;
    int root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex x) { return find(x) == root; });
  }

  void leaf(const std::vector<int>& position) {
    Rows rows(n_, 0);
    for (const Edge& e : g_.edges()) {
      rows[position[e.u]] |= std::uint64_t{1} << position[e.v];
      rows[position[e.v]] |= std::uint64_t{1} << position[e.u];
    }
    if (best_rows_.empty() && n_ > 0 && best_position_.empty()) {
      best_rows_ = std::move(rows);
      best_position_ = position;
      return;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_position_ = position;
      return;
    }
    if (rows == best_rows_) {
      // position and best_position_ give the same graph: their composition
      // is an automorphism.
      std::vector<Vertex> at(n_);
      for (Vertex u = 0; u < n_; ++u) at[best_position_[u]] = u;
      std::vector<Vertex> perm(n_);
      bool identity = true;
      for (Vertex v = 0; v < n_; ++v) {
        perm[v] = at[position[v]];
        identity = identity && perm[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(perm));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> prefix_;
  Rows best_rows_;
  std::vector<int> best_position_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

Canonization canonize(const Graph& g) {
  if (g.order() > kCanonicalBudget)
    throw BudgetExceeded("canonical labelling budget is " + std::to_string(kCanonicalBudget) +
                         " vertices, graph has " + std::to_string(g.order()));
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

CanonicalLabel canonical_form(const Graph& g) { return canonize(g).label; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cubic
