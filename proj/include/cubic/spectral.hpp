#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

/// Exact det(xI - A), coefficients from x^n down to the constant term.
struct CharPoly {
  std::vector<mpz_class> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  mpz_class evaluate(const mpz_class& x) const;
  /// Multiplicity of the root k, found by repeated exact division by (x - k).
  int root_multiplicity(long k) const;
  /// Quotient by (x - k)^times; throws if the division is not exact.
  CharPoly divide_by_root(long k, int times = 1) const;
  /// "1,0,-6,-8,-3"
  std::string to_string() const;
  static CharPoly parse(const std::string& text);

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coefficients == b.coefficients; }
};

/// Largest order char_poly accepts.
inline constexpr int kCharPolyBudget = 2000;

/// Characteristic polynomial by Hessenberg reduction modulo enough 62-bit
/// primes to exceed twice the Hadamard bound on every coefficient, then
/// Chinese remaindering to the symmetric range.
CharPoly char_poly(const Graph& g);

/// Faddeev-LeVerrier recurrence in exact integers, O(n^4). Independent route
/// used to cross-check char_poly on small graphs.
CharPoly char_poly_faddeev_leverrier(const Graph& g);

/// Exact determinant of an integer matrix (fraction-free Bareiss).
mpz_class determinant(std::vector<std::vector<mpz_class>> m);

/// Exact polynomial identity test on the characteristic polynomials.
bool are_cospectral(const Graph& a, const Graph& b);

/// Descending eigenvalues with helpers for grouped rendering.
struct Spectrum {
  struct Group {
    double value;
    int multiplicity;
  };

  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double largest() const { return values.front(); }
  /// lambda_i, 1-based, as conventionally indexed.
  double lambda(int i) const { return values.at(i - 1); }
  std::vector<Group> grouped(double tolerance = 1e-6) const;
  /// [{"value": v, "multiplicity": m}] with 12 significant digits.
  std::string to_json(double tolerance = 1e-6) const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// vectors[i] is a unit eigenvector for spectrum.values[i].
  std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below 1e-12.
EigenDecomposition eigen_decomposition(const Graph& g);
Spectrum eigenvalues(const Graph& g);

/// Exact (v^T A v) / (v^T v).
mpq_class rayleigh(const Graph& g, const std::vector<mpq_class>& v);

/// 3 - 6 / (9 n2 - 5): the quotient for a component that is cubic except one
/// degree-2 vertex carrying weight 2 (all other weights 3). n2 odd, >= 11.
mpq_class rayleigh_formula_c2(long n2);
/// Two degree-2 vertices with weight 2: (27 n1 - 40) / (9 n1 - 10) when they
/// are adjacent, (27 n1 - 42) / (9 n1 - 10) otherwise. n1 even, >= 26.
mpq_class rayleigh_formula_c1(long n1, bool adjacent);

/// Images of a cubic spectrum under truncation: each lambda gives
/// (1 +- sqrt(13 + 4 lambda)) / 2, plus -2 and 0 each n/2 times.
Spectrum truncation_spectrum_map(const Spectrum& s);

/// Closed-walk profile of a truncated cubic graph: order divisible by 3,
/// 3-regular, order/3 triangles and no 4-cycles, all in exact integers.
bool truncated_shape_check(const Graph& g);

}  // namespace cubic
