#include <algorithm>
#include <deque>

#include "json.hpp"

#include "cubic/errors.hpp"
#include "cubic/matchcolor.hpp"

namespace cubic {

namespace {

// Edmonds' algorithm: BFS over an alternating forest rooted at one exposed
// vertex, contracting odd cycles (blossoms) via the base[] array.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), even_(n_), in_blossom_(n_) {}

  void greedy_start() {
    for (const Edge& e : g_.edges())
      if (match_[e.u] < 0 && match_[e.v] < 0) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
  }

  void solve() {
    greedy_start();
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] >= 0) continue;
      Vertex end = search(root);
      while (end >= 0) {
        // Flip the alternating path back to the root.
        Vertex prev = parent_[end];
        Vertex next = match_[prev];
        match_[end] = prev;
        match_[prev] = end;
        end = next;
      }
    }
  }

  // Vertices reachable from `root` on even-length alternating paths,
  // valid after a search that found no augmenting path.
  std::vector<char> even_reach(Vertex root) {
    Vertex end = search(root);
    if (end >= 0) throw CertificationError("augmenting path after maximum matching");
    return even_;
  }

  const std::vector<Vertex>& mate() const { return match_; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // Returns the exposed endpoint of an augmenting path from root, or -1.
  Vertex search(Vertex root) {
    std::fill(even_.begin(), even_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    std::deque<Vertex> queue{root};
    even_[root] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          Vertex cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur_base;
            if (!even_[i]) {
              even_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          even_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> even_;
  std::vector<char> in_blossom_;
};

std::vector<Edge> edges_of(const std::vector<Vertex>& mate) {
  std::vector<Edge> out;
  for (Vertex v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

std::vector<VertexSet> odd_components_without(const Graph& g, const VertexSet& barrier) {
  std::vector<char> removed(g.order(), 0);
  for (Vertex v : barrier) removed[v] = 1;
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) keep.push_back(v);
  Graph rest = induced_subgraph(g, keep);
  std::vector<VertexSet> out;
  for (const VertexSet& comp : components(rest)) {
    if (comp.size() % 2 == 0) continue;
    VertexSet original;
    for (Vertex v : comp) original.push_back(keep[v]);
    out.push_back(std::move(original));
  }
  return out;
}

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
  Blossom b(g);
  b.solve();
  return edges_of(b.mate());
}

bool MatchingCertificate::valid_for(const Graph& g) const {
  if (const auto* matching = std::get_if<std::vector<Edge>>(&payload)) {
    if (static_cast<int>(matching->size()) * 2 != g.order()) return false;
    std::vector<char> covered(g.order(), 0);
    for (const Edge& e : *matching) {
      if (!g.adjacent(e.u, e.v) || covered[e.u] || covered[e.v]) return false;
      covered[e.u] = covered[e.v] = 1;
    }
    return true;
  }
  const auto& tutte = std::get<TutteSet>(payload);
  for (std::size_t i = 0; i < tutte.barrier.size(); ++i) {
    if (tutte.barrier[i] < 0 || tutte.barrier[i] >= g.order()) return false;
    if (i > 0 && tutte.barrier[i] <= tutte.barrier[i - 1]) return false;
  }
  auto odd = odd_components_without(g, tutte.barrier);
  return odd == tutte.odd_components && odd.size() > tutte.barrier.size();
}

std::string MatchingCertificate::to_json() const {
  if (const auto* matching = std::get_if<std::vector<Edge>>(&payload)) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : *matching) edges.push_back({e.u, e.v});
    return nlohmann::json{{"kind", "matching"}, {"edges", edges}}.dump();
  }
  const auto& tutte = std::get<TutteSet>(payload);
  return nlohmann::json{{"kind", "tutte"}, {"barrier", tutte.barrier}, {"odd_components", tutte.odd_components}}
      .dump();
}

MatchingCertificate perfect_matching_certificate(const Graph& g) {
  if (g.order() % 2 != 0) throw PreconditionError("perfect matching certificate needs even order");
  Blossom b(g);
  b.solve();
  MatchingCertificate out;
  const auto& mate = b.mate();
  if (std::all_of(mate.begin(), mate.end(), [](Vertex m) { return m >= 0; })) {
    out.payload = edges_of(mate);
  } else {
    std::vector<char> deficient(g.order(), 0);
    for (Vertex r = 0; r < g.order(); ++r) {
      if (mate[r] >= 0) continue;
      auto reach = b.even_reach(r);
      for (Vertex v = 0; v < g.order(); ++v) deficient[v] |= reach[v];
    }
    TutteSet tutte;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (deficient[v]) continue;
      auto nbrs = g.neighbors(v);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return deficient[w]; }))
        tutte.barrier.push_back(v);
    }
    tutte.odd_components = odd_components_without(g, tutte.barrier);
    out.payload = std::move(tutte);
  }
  if (!out.valid_for(g)) throw CertificationError("matching certificate failed validation");
  return out;
}

}  // namespace cubic
