#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>

#include "cubic/errors.hpp"
#include "cubic/spectral.hpp"

namespace cubic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Primes just below 2^62, descending; extended on demand.
u64 nth_prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

u64 inverse_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Characteristic polynomial of the adjacency matrix modulo p, leading first.
std::vector<u64> char_poly_mod(const Graph& g, u64 p) {
  const int n = g.order();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n, 0));
  for (const Edge& e : g.edges()) h[e.u][e.v] = h[e.v][e.u] = 1;

  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i)
      if (h[i][j] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    const u64 inv = inverse_mod(h[j + 1][j], p);
    for (int i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const u64 u = mul_mod(h[i][j], inv, p);
      // row_i -= u * row_{j+1}
      for (int c = 0; c < n; ++c) {
        if (h[j + 1][c] == 0) continue;
        h[i][c] = (h[i][c] + p - mul_mod(u, h[j + 1][c], p)) % p;
      }
      // col_{j+1} += u * col_i
      for (int r = 0; r < n; ++r) {
        if (h[r][i] == 0) continue;
        h[r][j + 1] = (h[r][j + 1] + mul_mod(u, h[r][i], p)) % p;
      }
    }
  }

  // polys[k] = char poly of the leading k x k block, stored constant-first.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (int k = 1; k <= n; ++k) {
    auto& cur = polys[k];
    cur.assign(k + 1, 0);
    const auto& prev = polys[k - 1];
    // (x - h_kk) p_{k-1}
    const u64 diag = h[k - 1][k - 1];
    for (int d = 0; d < k; ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mul_mod(diag, prev[d], p)) % p;
    }
    // - sum_{i<k} h_{i,k} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-based.
    u64 product = 1;
    for (int i = k - 1; i >= 1; --i) {
      product = mul_mod(product, h[i][i - 1], p);
      if (product == 0) break;
      const u64 coef = mul_mod(h[i - 1][k - 1], product, p);
      if (coef == 0) continue;
      const auto& lower = polys[i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d)
        cur[d] = (cur[d] + p - mul_mod(coef, lower[d], p)) % p;
    }
  }
  std::vector<u64> out(polys[n].rbegin(), polys[n].rend());
  return out;
}

// max_k C(n,k) * maxdeg^ceil(k/2) bounds |coefficient of x^{n-k}| by Hadamard.
mpz_class coefficient_bound(const Graph& g) {
  const int n = g.order();
  const long d = std::max(1, g.max_degree());
  mpz_class best = 1;
  mpz_class binom = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      binom *= n - k + 1;
      binom /= k;
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), d, (k + 1) / 2);
    best = std::max(best, mpz_class(binom * power));
  }
  return best;
}

}  // namespace

mpz_class CharPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (const auto& c : coefficients) acc = acc * x + c;
  return acc;
}

CharPoly CharPoly::divide_by_root(long k, int times) const {
  CharPoly cur = *this;
  for (int t = 0; t < times; ++t) {
    if (cur.coefficients.size() < 2) throw CertificationError("cannot divide a constant by (x - k)");
    // Synthetic division.
    std::vector<mpz_class> q;
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < cur.coefficients.size(); ++i) {
      acc = acc * k + cur.coefficients[i];
      q.push_back(acc);
    }
    mpz_class remainder = acc * k + cur.coefficients.back();
    if (remainder != 0)
      throw CertificationError("(x - " + std::to_string(k) + ") does not divide the polynomial");
    cur.coefficients = std::move(q);
  }
  return cur;
}

int CharPoly::root_multiplicity(long k) const {
  int m = 0;
  CharPoly cur = *this;
  while (cur.degree() > 0 && cur.evaluate(k) == 0) {
    cur = cur.divide_by_root(k);
    ++m;
  }
  return m;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out.push_back(',');
    out += coefficients[i].get_str();
  }
  return out;
}

CharPoly CharPoly::parse(const std::string& text) {
  CharPoly out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    mpz_class c;
    if (c.set_str(token, 10) != 0) throw ParseError("bad coefficient '" + token + "'", 0);
    out.coefficients.push_back(c);
  }
  return out;
}

CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  if (n > kCharPolyBudget)
    throw BudgetExceeded("char_poly budget is " + std::to_string(kCharPolyBudget) + " vertices");
  if (n == 0) return CharPoly{{1}};

  const mpz_class bound = coefficient_bound(g);
  mpz_class modulus = 1;
  std::vector<mpz_class> value;
  for (std::size_t i = 0; modulus <= 2 * bound; ++i) {
    const u64 p = nth_prime(i);
    std::vector<u64> residues = char_poly_mod(g, p);
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    if (value.empty()) {
      for (u64 r : residues) {
        mpz_class rz;
        mpz_import(rz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &r);
        value.push_back(rz);
      }
    } else {
      // Garner step: x += M * ((r - x) * M^{-1} mod p).
      mpz_class m_inv;
      mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t c = 0; c < residues.size(); ++c) {
        mpz_class rz;
        mpz_import(rz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &residues[c]);
        mpz_class t = (rz - value[c]) * m_inv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        value[c] += modulus * t;
      }
    }
    modulus *= pz;
  }
  const mpz_class half = modulus / 2;
  for (auto& c : value)
    if (c > half) c -= modulus;
  return CharPoly{std::move(value)};
}

CharPoly char_poly_faddeev_leverrier(const Graph& g) {
  const int n = g.order();
  // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c_{n-k+1} I.
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n));
  for (int k = 1; k <= n; ++k) {
    // next = A * m + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (Vertex w : g.neighbors(i)) s += m[w][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    std::swap(m, next);
    // c_{n-k} = -trace(A M_k) / k; the division is exact.
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i)
      for (Vertex w : g.neighbors(i)) trace += m[w][i];
    mpz_class q = -trace;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = q;
  }
  return CharPoly{std::vector<mpz_class>(c.rbegin(), c.rend())};
}

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool are_cospectral(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return char_poly(a) == char_poly(b);
}

}  // namespace cubic
