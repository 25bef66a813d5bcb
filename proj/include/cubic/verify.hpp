#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubic/graph.hpp"
#include "cubic/spectral.hpp"

namespace cubic {

// ---------------------------------------------------------------------------
// Thresholds and the lambda_2 perfect-matching condition

/// Reference decimals the computed thresholds are checked against.
inline constexpr double kThetaReference = 2.85577;
inline constexpr double kThetaPrimeReference = 2.94272;
inline constexpr double kThresholdTolerance = 1e-4;
/// lambda_2 within this distance of theta' is never asserted either way.
inline constexpr double kGuardBand = 1e-8;
/// The condition only applies to graphs with more vertices than this.
inline constexpr int kMinimumOrder = 76;

/// Source of named graphs; lets tests inject a corrupted catalog entry.
using GraphSource = std::function<Graph(std::string_view)>;

struct Thresholds {
  double theta = 0;        ///< largest eigenvalue of F
  double theta_prime = 0;  ///< largest eigenvalue of F'

  static Thresholds compute(const GraphSource& source = catalog);
  bool matches_reference() const;
};

struct PMConditionReport {
  int order = 0;
  double lambda2 = 0;
  bool applicable = false;
  bool near_threshold = false;
  bool asserted = false;
  bool matching_found = false;
  bool consistent = true;

  nlohmann::json to_json() const;
};

/// lambda_2 < theta' and n > 76 asserts a perfect matching; the blossom
/// matcher checks the assertion.
PMConditionReport check_pm_condition(const Graph& g, const Thresholds& t);

/// Accumulates condition reports over every graph a run touches.
class PMConditionLedger {
 public:
  explicit PMConditionLedger(Thresholds t) : thresholds_(t) {}
  const PMConditionReport& record(const Graph& g);
  std::size_t checked() const { return reports_.size(); }
  std::size_t asserted() const;
  std::size_t violations() const;

 private:
  Thresholds thresholds_;
  std::vector<PMConditionReport> reports_;
};

// ---------------------------------------------------------------------------
// The order-16 pair

/// The 3-vertex path 4-0-1 on the outer cycle of the catalog Petersen graph.
VertexSet petersen_path();
/// Petersen graph truncated at petersen_path(): order 16, cubic.
Graph build_fig1_H(const GraphSource& source = catalog);

struct Fig1Mate {
  Graph graph;
  CharPoly poly;
  std::size_t bucket_size = 0;  ///< corpus graphs sharing H's polynomial
};

/// The unique corpus member cospectral with H, not isomorphic to it, and of
/// chromatic index 3. Throws CertificationError with diagnostics otherwise.
Fig1Mate find_fig1_G(const std::vector<Graph>& corpus, const Graph& h);

/// Factors of the polynomial printed with the pair in the literature, as
/// coefficient lists (leading first). Their product has degree 14.
std::vector<std::vector<long>> published_pair_polynomial_factors();

/// Exact quotient of p by a monic integer polynomial, if it divides.
std::optional<CharPoly> divide_exact(const CharPoly& p, const std::vector<long>& monic);

// ---------------------------------------------------------------------------
// Cospectral corpus scan

enum class Invariant { ChromaticIndex, PerfectMatching, Hamiltonian, ChromaticNumber };

std::string invariant_name(Invariant i);
Invariant parse_invariant(std::string_view name);
std::vector<Invariant> all_invariants();

struct InvariantVector {
  std::optional<int> chromatic_index;
  std::optional<bool> perfect_matching;
  std::optional<bool> hamiltonian;
  std::optional<int> chromatic_number;

  nlohmann::json to_json() const;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

struct ScanPair {
  std::size_t first = 0;   ///< corpus index
  std::size_t second = 0;  ///< corpus index
  InvariantVector first_invariants;
  InvariantVector second_invariants;
  std::vector<std::string> differing;  ///< names of invariants that differ
};

struct ScanReport {
  std::size_t corpus_size = 0;
  std::size_t distinct_polynomials = 0;
  /// Polynomial text -> corpus indices, for polynomials shared by 2+ graphs.
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::vector<ScanPair> pairs;

  std::size_t pairs_differing_in(Invariant i) const;
  nlohmann::json to_json(const std::vector<Graph>& corpus) const;
};

/// Buckets the corpus by exact characteristic polynomial and, inside shared
/// buckets, computes the selected invariants and certifies every pair
/// non-isomorphic. The corpus must be free of isomorphic duplicates.
/// `jobs` worker threads share the polynomial computation.
ScanReport cospectral_scan(const std::vector<Graph>& corpus, const std::vector<Invariant>& invariants,
                           int jobs = 1);

struct CorpusLoad {
  std::vector<Graph> graphs;
  std::size_t lines = 0;
  std::size_t malformed = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> warnings;
};

/// Reads graph6 lines, skipping malformed ones with a warning and dropping
/// isomorphic duplicates (up to the canonical-labelling budget).
CorpusLoad read_corpus(std::istream& in);

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct Claim {
  std::string id;
  std::string anchor;  ///< short name of the statement being checked
  Status status = Status::Fail;
  std::string detail;
  nlohmann::json witness;
};

struct VerifyReport {
  std::vector<Claim> claims;
  std::string generated_at;

  bool passed() const;
  void append(const VerifyReport& other);
  const Claim* find(std::string_view id) const;
  nlohmann::json to_json() const;
  static VerifyReport from_json(const nlohmann::json& j);
};

struct VerifyOptions {
  GraphSource source = catalog;
  /// The order-16 enumeration and scan dominate the runtime.
  bool include_order16 = true;
  int jobs = 1;
  unsigned long long seed = 20240601;
};

// Scenario runners. Each returns one or more claims; failures are data.
VerifyReport verify_thresholds(const VerifyOptions& options = {});
VerifyReport verify_truncation_spectrum(const VerifyOptions& options = {});
VerifyReport verify_chromatic_index_preservation(const VerifyOptions& options = {});
VerifyReport verify_fig1_pair(const VerifyOptions& options = {});
VerifyReport verify_family(const VerifyOptions& options = {});
VerifyReport verify_line_graph_coloring(const VerifyOptions& options = {});
VerifyReport verify_fdoubleprime(const VerifyOptions& options = {});
VerifyReport scenario_rayleigh(const VerifyOptions& options = {});
VerifyReport scenario_final_remark(const VerifyOptions& options = {});
VerifyReport verify_recognition(const VerifyOptions& options = {});
VerifyReport verify_hamiltonicity_preservation(const VerifyOptions& options = {});
VerifyReport verify_truncations_have_matchings(const VerifyOptions& options = {});

/// Every scenario above plus the perfect-matching condition ledger over all
/// graphs touched. generated_at is the only run-dependent field.
VerifyReport verify_all(const VerifyOptions& options = {});

/// The order-16 class-1 mate of H (memoised scan of the order-16 corpus).
const Graph& fig1_G();

}  // namespace cubic
