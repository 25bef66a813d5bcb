#include "cubic/random.hpp"

#include <algorithm>
#include <numeric>

#include "cubic/errors.hpp"

namespace cubic {

Graph random_regular_graph(int n, int d, std::mt19937_64& rng) {
  if (n <= d || (n * d) % 2 != 0 || d < 0) throw PreconditionError("no simple d-regular graph with these parameters");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      if (points[i] == points[i + 1]) simple = false;
      else edges.emplace_back(points[i], points[i + 1]);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
}

Graph random_connected_cubic(int n, std::mt19937_64& rng) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("cubic graphs need even order >= 4");
  for (;;) {
    Graph g = random_regular_graph(n, 3, rng);
    if (component_count(g) == 1) return g;
  }
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph shuffle_labels(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace cubic
