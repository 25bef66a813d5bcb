#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Components of g restricted to vertices with alive[v].
std::vector<int> component_sizes(const Graph& g, const std::vector<char>& alive) {
  std::vector<int> sizes;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (!alive[s] || seen[s]) continue;
    int count = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : g.neighbors(v))
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    sizes.push_back(count);
  }
  return sizes;
}

}  // namespace

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_sizes(g, std::vector<char>(g.order(), 1)).size() == 1;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() > 9) throw std::invalid_argument("permutation oracle is limited to order 9");
  const auto mb = matrix(b);
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!mb[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::int64_t closed_walks(const Graph& g, int k) {
  std::int64_t total = 0;
  std::function<void(int, int, int)> walk = [&](int start, int at, int left) {
    if (left == 0) {
      total += at == start;
      return;
    }
    for (int w : g.neighbors(at)) walk(start, w, left - 1);
  };
  for (int v = 0; v < g.order(); ++v) walk(v, v, k);
  return total;
}

std::int64_t triangles(const Graph& g) {
  const auto a = matrix(g);
  std::int64_t count = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      for (int k = j + 1; k < g.order(); ++k) count += a[i][j] && a[j][k] && a[i][k];
  return count;
}

int max_matching_size(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("matching oracle is limited to order 20");
  // best[mask]: maximum matching inside the vertex set mask.
  std::vector<signed char> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int value = best[rest];
    for (int w : g.neighbors(v))
      if (rest & (1u << w)) value = std::max(value, best[rest & ~(1u << w)] + 1);
    best[mask] = static_cast<signed char>(value);
  }
  return best[(1u << n) - 1];
}

bool has_tutte_set(const Graph& g, int max_size) {
  const int n = g.order();
  std::vector<int> pick;
  std::function<bool(int)> search = [&](int from) {
    std::vector<char> alive(n, 1);
    for (int v : pick) alive[v] = 0;
    int odd = 0;
    for (int s : component_sizes(g, alive)) odd += s % 2;
    if (odd > static_cast<int>(pick.size())) return true;
    if (static_cast<int>(pick.size()) == max_size) return false;
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      if (search(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return search(0);
}

std::vector<mpz_class> char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<mpq_class> p(n + 1);  // power sums p_k = tr(A^k)
  for (int k = 1; k <= n; ++k) p[k] = static_cast<long>(oracle::closed_walks(g, k));
  // Newton: k c_k = -sum_{i=1..k} c_{k-i} p_i, with c_0 = 1.
  std::vector<mpq_class> c(n + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= k; ++i) s += c[k - i] * p[i];
    c[k] = -s / k;
  }
  std::vector<mpz_class> out;
  for (auto& q : c) {
    if (q.get_den() != 1) throw std::logic_error("non-integral coefficient");
    out.push_back(q.get_num());
  }
  return out;
}

int chromatic_index(const Graph& g) {
  const int m = g.size();
  for (int k = 1;; ++k) {
    std::vector<int> c(m, 0);
    std::function<bool(int)> assign = [&](int i) {
      if (i == m) return true;
      for (int col = 0; col < k; ++col) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          const auto& a = g.edges()[i];
          const auto& b = g.edges()[j];
          if (c[j] == col && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) ok = false;
        }
        if (!ok) continue;
        c[i] = col;
        if (assign(i + 1)) return true;
      }
      return false;
    };
    if (m == 0 || assign(0)) return m == 0 ? 0 : k;
  }
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    std::function<bool(int)> assign = [&](int v) {
      if (v == n) return true;
      for (int col = 0; col < k; ++col) {
        bool ok = true;
        for (int w : g.neighbors(v))
          if (w < v && c[w] == col) ok = false;
        if (!ok) continue;
        c[v] = col;
        if (assign(v + 1)) return true;
      }
      return false;
    };
    if (assign(0)) return k;
  }
}

bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool(int, int)> dfs = [&](int at, int depth) {
    if (depth == n) return g.adjacent(at, 0);
    for (int w : g.neighbors(at)) {
      if (used[w]) continue;
      used[w] = 1;
      if (dfs(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return dfs(0, 1);
}

std::vector<Graph> cubic_graphs(int n) {
  std::vector<cubic::Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  const int m = 3 * n / 2;
  std::vector<Graph> out;
  std::vector<cubic::Edge> pick;
  std::vector<int> degree(n, 0);
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == m) {
      Graph g(n, pick);
      if (!connected(g)) return;
      for (const Graph& h : out)
        if (isomorphic(g, h)) return;
      out.push_back(g);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      const auto& e = all[i];
      if (degree[e.u] == 3 || degree[e.v] == 3) continue;
      // Later edges never touch vertices below e.u again, so they must be full.
      for (int w = 0; w < e.u; ++w)
        if (degree[w] != 3) return;
      ++degree[e.u];
      ++degree[e.v];
      pick.push_back(e);
      choose(i + 1);
      pick.pop_back();
      --degree[e.u];
      --degree[e.v];
    }
  };
  choose(0);
  return out;
}

}  // namespace oracle
