#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

#include "cubic/errors.hpp"
#include "cubic/spectral.hpp"

namespace cubic {

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double round_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

std::vector<Spectrum::Group> Spectrum::grouped(double tolerance) const {
  std::vector<Group> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    double sum = 0;
    while (j < values.size() && std::abs(values[j] - values[i]) <= tolerance) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

std::string Spectrum::to_json(double tolerance) const {
  nlohmann::json out = nlohmann::json::array();
  for (const Group& grp : grouped(tolerance))
  {
    // Rounding to 1e-10 first keeps solver noise such as -1.5e-16 out of the output.
    const double snapped = std::round(grp.value * 1e10) / 1e10 + 0.0;
    out.push_back({{"value", round_significant(snapped, 12)}, {"multiplicity", grp.multiplicity}});
  }
  return out.dump();
}

EigenDecomposition eigen_decomposition(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("eigenvalues of the empty graph");
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1.0;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  auto off_norm = [&] {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2 * a[p][q] * a[p][q];
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= kOffDiagonalTolerance; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });
  EigenDecomposition out;
  for (int idx : order) {
    out.spectrum.values.push_back(a[idx][idx]);
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) col[k] = v[k][idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

Spectrum eigenvalues(const Graph& g) { return eigen_decomposition(g).spectrum; }

mpq_class rayleigh(const Graph& g, const std::vector<mpq_class>& v) {
  if (static_cast<int>(v.size()) != g.order())
    throw PreconditionError("vector has " + std::to_string(v.size()) + " entries, graph has " +
                            std::to_string(g.order()) + " vertices");
  mpq_class norm = 0;
  for (const auto& x : v) norm += x * x;
  if (norm == 0) throw PreconditionError("Rayleigh quotient of the zero vector");
  mpq_class form = 0;
  for (const Edge& e : g.edges()) form += 2 * v[e.u] * v[e.v];
  mpq_class out = form / norm;
  out.canonicalize();
  return out;
}

mpq_class rayleigh_formula_c2(long n2) {
  if (n2 < 11 || n2 % 2 == 0) throw PreconditionError("c2 needs odd n2 >= 11");
  mpq_class out = mpq_class(3) - mpq_class(6, 9 * n2 - 5);
  out.canonicalize();
  return out;
}

mpq_class rayleigh_formula_c1(long n1, bool adjacent) {
  if (n1 < 26 || n1 % 2 != 0) throw PreconditionError("c1 needs even n1 >= 26");
  mpq_class out(27 * n1 - (adjacent ? 40 : 42), 9 * n1 - 10);
  out.canonicalize();
  return out;
}

Spectrum truncation_spectrum_map(const Spectrum& s) {
  const int n = s.size();
  if (n == 0 || n % 2 != 0) throw PreconditionError("cubic spectrum must have even, non-zero size");
  if (std::abs(s.largest() - 3.0) > 1e-8)
    throw PreconditionError("largest eigenvalue " + std::to_string(s.largest()) + " is not 3");
  Spectrum out;
  for (double lambda : s.values) {
    const double root = std::sqrt(std::max(0.0, 13 + 4 * lambda));
    out.values.push_back(0.5 + 0.5 * root);
    out.values.push_back(0.5 - 0.5 * root);
  }
  out.values.insert(out.values.end(), n / 2, -2.0);
  out.values.insert(out.values.end(), n / 2, 0.0);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

bool truncated_shape_check(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 3 != 0) return false;
  if (!g.is_cubic() || closed_walks(g, 2) != 3 * static_cast<std::int64_t>(n)) return false;
  if (closed_walks(g, 3) != 2 * static_cast<std::int64_t>(n)) return false;
  return closed_walks(g, 4) == 15 * static_cast<std::int64_t>(n);
}

}  // namespace cubic
