#include "cubic/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "cubic/canonical.hpp"
#include "cubic/errors.hpp"

namespace cubic {

namespace {

// Loopless cubic multigraph. Edges sorted, repeats allowed.
struct Multigraph {
  int order = 0;
  std::vector<Edge> edges;

  // Edges beyond the first between each adjacent pair.
  int excess() const {
    int extra = 0;
    for (std::size_t i = 1; i < edges.size(); ++i) extra += edges[i] == edges[i - 1];
    return extra;
  }
};

// Simple graph with one extra degree-2 vertex per repeated edge copy. The
// original vertices keep degree 3, so the encoding is isomorphism-faithful.
Graph encode(const Multigraph& m) {
  std::vector<Edge> edges;
  int next = m.order;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = m.edges[i];
    if (i > 0 && e == m.edges[i - 1]) {
      edges.emplace_back(e.u, next);
      edges.emplace_back(e.v, next);
      ++next;
    } else {
      edges.push_back(e);
    }
  }
  return Graph(next, std::move(edges));
}

struct Keyed {
  std::string key;
  Multigraph graph;
};

Keyed canonical(const Multigraph& m) {
  const int extra = m.excess();
  Canonization c = canonize(encode(m));
  // Degree-2 vertices sort first, so the original vertices occupy
  // positions extra .. extra + order - 1.
  Multigraph out{m.order, {}};
  out.edges.reserve(m.edges.size());
  for (const Edge& e : m.edges) out.edges.emplace_back(c.position[e.u] - extra, c.position[e.v] - extra);
  std::sort(out.edges.begin(), out.edges.end());
  return {c.label.key(), std::move(out)};
}

// Subdivide edge positions i1 <= i2 with x = order, y = order + 1 and join
// x, y. For i1 == i2 the edge a-b becomes a-x-y-b with x, y doubly joined.
Multigraph insert_edge(const Multigraph& g, std::size_t i1, std::size_t i2) {
  const int x = g.order;
  const int y = g.order + 1;
  Multigraph out{g.order + 2, {}};
  out.edges.reserve(g.edges.size() + 3);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != i1 && i != i2) out.edges.push_back(g.edges[i]);
  const Edge e1 = g.edges[i1];
  const Edge e2 = g.edges[i2];
  if (i1 == i2) {
    out.edges.emplace_back(e1.u, x);
    out.edges.emplace_back(x, y);
    out.edges.emplace_back(y, e1.v);
  } else {
    out.edges.emplace_back(e1.u, x);
    out.edges.emplace_back(e1.v, x);
    out.edges.emplace_back(e2.u, y);
    out.edges.emplace_back(e2.v, y);
  }
  out.edges.emplace_back(x, y);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph out{a.order + b.order, a.edges};
  for (const Edge& e : b.edges) out.edges.emplace_back(e.u + a.order, e.v + a.order);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// Connected loopless cubic multigraphs of each even order 2..target whose
// excess can still be removed before reaching `target`: each insertion
// subdivides at most two edges, so a graph of order m may keep at most
// target - m repeated copies.
class MultigraphLevels {
 public:
  explicit MultigraphLevels(int target) : target_(target) {
    // The theta graph: two vertices joined three times.
    levels_[2] = {Multigraph{2, {{0, 1}, {0, 1}, {0, 1}}}};
    for (int m = 4; m <= target_; m += 2) levels_[m] = grow(m);
  }

  const std::vector<Multigraph>& level(int m) const { return levels_.at(m); }

 private:
  int bound(int m) const { return target_ - m; }

  std::vector<Multigraph> grow(int m) {
    struct Parent {
      Multigraph graph;
      int split;  // first vertex of the second component, -1 if connected
    };
    std::vector<Parent> parents;
    for (const Multigraph& g : levels_[m - 2]) parents.push_back({g, -1});
    for (int a = 2; 2 * a <= m - 2; a += 2) {
      const int b = m - 2 - a;
      const auto& left = levels_[a];
      const auto& right = levels_[b];
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = (a == b ? i : 0); j < right.size(); ++j) {
          if (left[i].excess() + right[j].excess() > bound(m - 2)) continue;
          parents.push_back({disjoint_union(left[i], right[j]), a});
        }
      }
    }

    std::unordered_set<std::string> seen;
    std::vector<Keyed> found;
    for (const Parent& p : parents) {
      const auto& edges = p.graph.edges;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        // Identical edge copies give identical children.
        if (i > 0 && edges[i] == edges[i - 1]) continue;
        for (std::size_t j = i; j < edges.size(); ++j) {
          if (j > i + 1 && edges[j] == edges[j - 1]) continue;
          if (p.split >= 0 && (edges[i].u < p.split) == (edges[j].u < p.split)) continue;
          Multigraph child = insert_edge(p.graph, i, j);
          if (child.excess() > bound(m)) continue;
          Keyed k = canonical(child);
          if (seen.insert(k.key).second) found.push_back(std::move(k));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    std::vector<Multigraph> out;
    out.reserve(found.size());
    for (auto& k : found) out.push_back(std::move(k.graph));
    return out;
  }

  int target_;
  std::map<int, std::vector<Multigraph>> levels_;
};

std::vector<Graph> generate(int n) {
  MultigraphLevels levels(n);
  std::vector<Graph> out;
  for (const Multigraph& m : levels.level(n)) out.push_back(canonical_form(Graph(m.order, m.edges)).graph());
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return CanonicalLabel{a.order(), a.edges()}.key() < CanonicalLabel{b.order(), b.edges()}.key();
  });
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_cubic(int n) {
  if (n < 4 || n > kEnumerationLimit || n % 2 != 0)
    throw PreconditionError("enumerate_cubic needs even n in [4, " +
                            std::to_string(kEnumerationLimit) + "], got " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate(n)).first;
  return it->second;
}

std::vector<Graph> enumerate_cubic_up_to(int max_order) {
  std::vector<Graph> out;
  for (int n = 4; n <= max_order; n += 2) {
    const auto& level = enumerate_cubic(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace cubic
