#include "cubic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <istream>
#include <thread>
#include <unordered_set>

#include "cubic/canonical.hpp"
#include "cubic/enumerate.hpp"
#include "cubic/errors.hpp"
#include "cubic/graph6.hpp"
#include "cubic/matchcolor.hpp"
#include "cubic/random.hpp"
#include "cubic/truncation.hpp"

namespace cubic {

Thresholds Thresholds::compute(const GraphSource& source) {
  return {eigenvalues(source("F")).largest(), eigenvalues(source("Fprime")).largest()};
}

bool Thresholds::matches_reference() const {
  return std::abs(theta - kThetaReference) < kThresholdTolerance &&
         std::abs(theta_prime - kThetaPrimeReference) < kThresholdTolerance && theta < theta_prime;
}

nlohmann::json PMConditionReport::to_json() const {
  return {{"order", order},
          {"lambda2", lambda2},
          {"applicable", applicable},
          {"near_threshold", near_threshold},
          {"asserted", asserted},
          {"matching_found", matching_found},
          {"consistent", consistent}};
}

PMConditionReport check_pm_condition(const Graph& g, const Thresholds& t) {
  if (!g.is_cubic() || g.order() == 0) throw PreconditionError("the matching condition is stated for cubic graphs");
  PMConditionReport r;
  r.order = g.order();
  r.lambda2 = eigenvalues(g).lambda(2);
  r.near_threshold = std::abs(r.lambda2 - t.theta_prime) <= kGuardBand;
  r.applicable = !r.near_threshold && r.lambda2 < t.theta_prime && r.order > kMinimumOrder;
  r.asserted = r.applicable;
  r.matching_found = perfect_matching_certificate(g).has_perfect_matching();
  r.consistent = !r.asserted || r.matching_found;
  return r;
}

const PMConditionReport& PMConditionLedger::record(const Graph& g) {
  reports_.push_back(check_pm_condition(g, thresholds_));
  return reports_.back();
}

std::size_t PMConditionLedger::asserted() const {
  return std::count_if(reports_.begin(), reports_.end(), [](const auto& r) { return r.asserted; });
}

std::size_t PMConditionLedger::violations() const {
  return std::count_if(reports_.begin(), reports_.end(), [](const auto& r) { return !r.consistent; });
}

VertexSet petersen_path() { return {0, 1, 4}; }

Graph build_fig1_H(const GraphSource& source) { return truncate_set(source("petersen"), petersen_path()).graph; }

Fig1Mate find_fig1_G(const std::vector<Graph>& corpus, const Graph& h) {
  const CharPoly target = char_poly(h);
  Fig1Mate out;
  std::vector<std::size_t> mates;
  bool saw_h = false;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].order() != h.order() || char_poly(corpus[i]) != target) continue;
    ++out.bucket_size;
    if (is_isomorphic(corpus[i], h)) {
      saw_h = true;
      continue;
    }
    if (chromatic_index(corpus[i]).value == 3) mates.push_back(i);
  }
  if (!saw_h) throw CertificationError("corpus does not contain the partial truncation of the Petersen graph");
  if (mates.size() != 1)
    throw CertificationError("expected exactly one class-1 cospectral mate, found " + std::to_string(mates.size()) +
                             " among " + std::to_string(out.bucket_size) + " cospectral corpus graphs");
  out.graph = corpus[mates.front()];
  out.poly = target;
  return out;
}

std::vector<std::vector<long>> published_pair_polynomial_factors() {
  return {{1, 0},   {1, -3},      {1, 2},      {1, 0, -2},        {1, -1, -3},
          {1, -4, -2}, {1, -4, 1}, {1, 2, -2, -2}};
}

std::optional<CharPoly> divide_exact(const CharPoly& p, const std::vector<long>& monic) {
  if (monic.empty() || monic.front() != 1) throw PreconditionError("divisor must be monic");
  const int dq = static_cast<int>(monic.size()) - 1;
  if (p.degree() < dq) return std::nullopt;
  std::vector<mpz_class> rem = p.coefficients;
  std::vector<mpz_class> quot(p.degree() - dq + 1);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    quot[i] = rem[i];
    for (int j = 0; j <= dq; ++j) rem[i + j] -= quot[i] * monic[j];
  }
  for (std::size_t i = quot.size(); i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return CharPoly{std::move(quot)};
}

// ---------------------------------------------------------------------------

std::string invariant_name(Invariant i) {
  switch (i) {
    case Invariant::ChromaticIndex: return "chromatic_index";
    case Invariant::PerfectMatching: return "perfect_matching";
    case Invariant::Hamiltonian: return "hamiltonian";
    case Invariant::ChromaticNumber: return "chromatic_number";
  }
  return "?";
}

Invariant parse_invariant(std::string_view name) {
  for (Invariant i : all_invariants())
    if (invariant_name(i) == name) return i;
  throw PreconditionError("unknown invariant '" + std::string(name) + "'");
}

std::vector<Invariant> all_invariants() {
  return {Invariant::ChromaticIndex, Invariant::PerfectMatching, Invariant::Hamiltonian, Invariant::ChromaticNumber};
}

nlohmann::json InvariantVector::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  if (chromatic_index) out["chromatic_index"] = *chromatic_index;
  if (perfect_matching) out["perfect_matching"] = *perfect_matching;
  if (hamiltonian) out["hamiltonian"] = *hamiltonian;
  if (chromatic_number) out["chromatic_number"] = *chromatic_number;
  return out;
}

namespace {

InvariantVector compute_invariants(const Graph& g, const std::vector<Invariant>& which) {
  InvariantVector out;
  auto wants = [&](Invariant i) { return std::find(which.begin(), which.end(), i) != which.end(); };
  const bool cubic = g.is_cubic() && g.order() > 0;
  if (wants(Invariant::ChromaticIndex) && cubic) {
    auto r = chromatic_index(g);
    if (!r.witness.valid_for(g)) throw CertificationError("edge colouring witness failed validation");
    out.chromatic_index = r.value;
  }
  if (wants(Invariant::PerfectMatching))
    out.perfect_matching = g.order() % 2 == 0 && perfect_matching_certificate(g).has_perfect_matching();
  if (wants(Invariant::Hamiltonian) && g.order() <= kHamiltonBudget) {
    auto cycle = hamiltonian_cycle(g);
    out.hamiltonian = !cycle.empty();
  }
  if (wants(Invariant::ChromaticNumber)) {
    if (cubic) out.chromatic_number = chromatic_number_cubic(g);
    else if (g.order() <= kChromaticNumberBudget) out.chromatic_number = chromatic_number_small(g);
  }
  return out;
}

std::vector<std::string> differing_names(const InvariantVector& a, const InvariantVector& b) {
  std::vector<std::string> out;
  if (a.chromatic_index != b.chromatic_index) out.push_back(invariant_name(Invariant::ChromaticIndex));
  if (a.perfect_matching != b.perfect_matching) out.push_back(invariant_name(Invariant::PerfectMatching));
  if (a.hamiltonian != b.hamiltonian) out.push_back(invariant_name(Invariant::Hamiltonian));
  if (a.chromatic_number != b.chromatic_number) out.push_back(invariant_name(Invariant::ChromaticNumber));
  return out;
}

}  // namespace

std::size_t ScanReport::pairs_differing_in(Invariant i) const {
  const std::string name = invariant_name(i);
  return std::count_if(pairs.begin(), pairs.end(), [&](const ScanPair& p) {
    return std::find(p.differing.begin(), p.differing.end(), name) != p.differing.end();
  });
}

nlohmann::json ScanReport::to_json(const std::vector<Graph>& corpus) const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [poly, members] : buckets) {
    nlohmann::json g6 = nlohmann::json::array();
    for (auto i : members) g6.push_back(write_graph6(corpus[i]));
    b.push_back({{"char_poly", poly}, {"graphs", g6}});
  }
  nlohmann::json p = nlohmann::json::array();
  for (const ScanPair& pair : pairs) {
    p.push_back({{"first", write_graph6(corpus[pair.first])},
                 {"second", write_graph6(corpus[pair.second])},
                 {"first_invariants", pair.first_invariants.to_json()},
                 {"second_invariants", pair.second_invariants.to_json()},
                 {"differing", pair.differing}});
  }
  nlohmann::json counts = nlohmann::json::object();
  for (Invariant i : all_invariants()) counts[invariant_name(i)] = pairs_differing_in(i);
  return {{"corpus_size", corpus_size},
          {"distinct_polynomials", distinct_polynomials},
          {"cospectral_buckets", b},
          {"pairs", p},
          {"pairs_differing", counts}};
}

ScanReport cospectral_scan(const std::vector<Graph>& corpus, const std::vector<Invariant>& invariants, int jobs) {
  ScanReport report;
  report.corpus_size = corpus.size();
  std::vector<std::string> polys(corpus.size());
  jobs = std::max(1, jobs);
  {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < corpus.size(); i += jobs) {
          // The order prefix keeps graphs of different order apart.
          polys[i] = std::to_string(corpus[i].order()) + ":" + char_poly(corpus[i]).to_string();
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  std::map<std::string, std::vector<std::size_t>> all;
  for (std::size_t i = 0; i < corpus.size(); ++i) all[polys[i]].push_back(i);
  report.distinct_polynomials = all.size();
  for (auto& [key, members] : all) {
    if (members.size() < 2) continue;
    const std::string poly = key.substr(key.find(':') + 1);
    std::vector<InvariantVector> inv;
    for (auto i : members) inv.push_back(compute_invariants(corpus[i], invariants));
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!certified_non_isomorphic(corpus[members[a]], corpus[members[b]]))
          throw PreconditionError("scan corpus contains isomorphic graphs");
        report.pairs.push_back({members[a], members[b], inv[a], inv[b], differing_names(inv[a], inv[b])});
      }
    }
    report.buckets[poly] = members;
  }
  return report;
}

CorpusLoad read_corpus(std::istream& in) {
  CorpusLoad out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++out.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const std::exception& e) {
      ++out.malformed;
      out.warnings.push_back("line " + std::to_string(out.lines) + ": " + e.what());
      continue;
    }
    if (g.order() <= kCanonicalBudget) {
      if (!seen.insert(canonical_form(g).key()).second) {
        ++out.duplicates;
        continue;
      }
    } else {
      out.warnings.push_back("line " + std::to_string(out.lines) + ": order " + std::to_string(g.order()) +
                             " above the canonical-labelling budget, not deduplicated");
    }
    out.graphs.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "inconclusive") return Status::Inconclusive;
  throw ParseError("unknown status '" + s + "'", 0);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == Status::Fail; });
}

void VerifyReport::append(const VerifyReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

const Claim* VerifyReport::find(std::string_view id) const {
  for (const Claim& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const Claim& c : claims)
    list.push_back({{"id", c.id},
                    {"anchor", c.anchor},
                    {"status", status_name(c.status)},
                    {"detail", c.detail},
                    {"witness", c.witness}});
  return {{"schema", "cubic-verify/1"}, {"generated_at", generated_at}, {"passed", passed()}, {"claims", list}};
}

VerifyReport VerifyReport::from_json(const nlohmann::json& j) {
  VerifyReport out;
  out.generated_at = j.at("generated_at").get<std::string>();
  for (const auto& c : j.at("claims")) {
    out.claims.push_back({c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                          parse_status(c.at("status").get<std::string>()), c.at("detail").get<std::string>(),
                          c.at("witness")});
  }
  return out;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport report;
  report.generated_at = utc_now();
  for (auto runner : {verify_thresholds, verify_truncation_spectrum, verify_chromatic_index_preservation,
                      verify_fig1_pair, verify_family, verify_line_graph_coloring, verify_fdoubleprime,
                      scenario_rayleigh, scenario_final_remark, verify_recognition,
                      verify_hamiltonicity_preservation, verify_truncations_have_matchings}) {
    report.append(runner(options));
  }

  // The lambda_2 condition over everything above.
  Claim ledger_claim{"pm-condition-ledger", "lambda2 < theta' and n > 76 implies a perfect matching",
                     Status::Fail, "", nullptr};
  try {
    PMConditionLedger ledger(Thresholds::compute(options.source));
    auto touch = [&](const Graph& g) { ledger.record(g); };
    for (const Graph& g : enumerate_cubic_up_to(options.include_order16 ? 16 : 14)) touch(g);
    for (const Graph& g : enumerate_cubic_up_to(10)) touch(truncate_full(g));
    touch(options.source("Fdoubleprime"));
    const Graph petersen = options.source("petersen");
    touch(truncate_full(truncate_full(petersen)));
    const Graph tk4 = truncate_full(options.source("K4"));
    touch(disjoint_union({options.source("cube"), tk4, tk4}));
    touch(disjoint_union({options.source("K4"), options.source("K4"), bipartite_double(tk4)}));
    touch(build_fig1_H(options.source));
    // Random cubic graphs above the order bound usually fall below theta'.
    std::mt19937_64 rng(options.seed + 2);
    for (int n = 78; n <= 116; n += 2) touch(random_connected_cubic(n, rng));
    if (options.include_order16) {
      for (const auto& [a, b] : family_pairs(fig1_G(), build_fig1_H(options.source), 2)) {
        touch(a);
        touch(b);
      }
    }
    ledger_claim.status = ledger.violations() == 0 ? Status::Pass : Status::Fail;
    ledger_claim.detail = std::to_string(ledger.checked()) + " graphs checked, " +
                          std::to_string(ledger.asserted()) + " asserted, " +
                          std::to_string(ledger.violations()) + " violations";
    ledger_claim.witness = {{"checked", ledger.checked()},
                            {"asserted", ledger.asserted()},
                            {"violations", ledger.violations()}};
  } catch (const std::exception& e) {
    ledger_claim.detail = e.what();
  }
  report.claims.push_back(std::move(ledger_claim));
  return report;
}

}  // namespace cubic
