#include <random>

#include "doctest.h"

#include "cubic/enumerate.hpp"
#include "cubic/errors.hpp"
#include "cubic/matchcolor.hpp"
#include "cubic/random.hpp"
#include "cubic/truncation.hpp"
#include "oracles.hpp"

using namespace cubic;

namespace {

// Colour classes of a 3-edge-colouring of a cubic graph are perfect matchings.
bool classes_are_perfect_matchings(const Graph& g, const EdgeColoring& c) {
  for (int col = 0; col < 3; ++col) {
    std::vector<int> cover(g.order(), 0);
    for (std::size_t i = 0; i < c.colors.size(); ++i)
      if (c.colors[i] == col) {
        ++cover[g.edges()[i].u];
        ++cover[g.edges()[i].v];
      }
    for (int x : cover)
      if (x != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("matchcolor") {

TEST_CASE("chromatic index of named graphs") {
  CHECK(chromatic_index(catalog("K4")).value == 3);
  auto p = chromatic_index(catalog("petersen"));
  CHECK(p.value == 4);
  CHECK(p.exhausted);
  CHECK(p.witness.valid_for(catalog("petersen")));
  CHECK(p.witness.color_count() == 4);
  CHECK(chromatic_index(catalog("Fdoubleprime")).value == 4);
  CHECK(chromatic_index(truncate_full(catalog("petersen"))).value == 4);
  CHECK_THROWS_AS(chromatic_index(cycle_graph(5)), PreconditionError);
}

TEST_CASE("chromatic index against exhaustive colouring") {
  for (const Graph& g : enumerate_cubic_up_to(8)) {
    auto r = chromatic_index(g);
    CHECK(r.value == oracle::chromatic_index(g));
    CHECK(r.witness.valid_for(g));
    if (r.value == 3) CHECK(classes_are_perfect_matchings(g, r.witness));
  }
  CHECK(oracle::chromatic_index(catalog("petersen")) == 4);
}

TEST_CASE("edge colouring validator") {
  Graph k4 = catalog("K4");
  EdgeColoring bad{std::vector<int>(6, 0)};
  CHECK_FALSE(bad.valid_for(k4));
  EdgeColoring short_one{std::vector<int>{0, 1}};
  CHECK_FALSE(short_one.valid_for(k4));
  CHECK(edge_coloring(k4, 2) == std::nullopt);
  CHECK(edge_coloring(k4, 3).has_value());
}

TEST_CASE("lifting and restricting colourings") {
  std::size_t lifted = 0;
  for (const Graph& g : enumerate_cubic_up_to(10)) {
    auto r = chromatic_index(g);
    Truncation t = truncate_full_traced(g);
    CHECK(chromatic_index(t.graph).value == r.value);
    if (r.value != 3) continue;
    EdgeColoring up = lift_coloring(g, r.witness, t);
    CHECK(up.valid_for(t.graph));
    CHECK(up.color_count() == 3);
    CHECK(restrict_coloring(g, up, t).colors == r.witness.colors);
    // Any 3-colouring of T(G) restricts to a valid one.
    auto other = chromatic_index(t.graph);
    CHECK(restrict_coloring(g, other.witness, t).valid_for(g));
    ++lifted;
  }
  CHECK(lifted == 25);
  Graph k4 = catalog("K4");
  Truncation t = truncate_full_traced(k4);
  EdgeColoring wrong{std::vector<int>(6, 0)};
  CHECK_THROWS_AS(lift_coloring(k4, wrong, t), PreconditionError);
}

TEST_CASE("maximum matching against subset DP") {
  CHECK(maximum_matching(catalog("K4")).size() == 2);
  CHECK(maximum_matching(catalog("Fdoubleprime")).size() == 7);
  CHECK(oracle::max_matching_size(catalog("Fdoubleprime")) == 7);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, 0.1 + 0.5 * static_cast<double>(rng() % 10) / 10.0, rng);
    auto m = maximum_matching(g);
    CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(g));
    std::vector<int> used(n, 0);
    for (const Edge& e : m) {
      CHECK(g.adjacent(e.u, e.v));
      CHECK(++used[e.u] == 1);
      CHECK(++used[e.v] == 1);
    }
  }
}

TEST_CASE("perfect matching certificates") {
  auto p = perfect_matching_certificate(catalog("petersen"));
  CHECK(p.has_perfect_matching());
  CHECK(std::get<std::vector<Edge>>(p.payload).size() == 5);
  CHECK(p.valid_for(catalog("petersen")));

  Graph fpp = catalog("Fdoubleprime");
  auto f = perfect_matching_certificate(fpp);
  REQUIRE_FALSE(f.has_perfect_matching());
  const auto& ts = std::get<TutteSet>(f.payload);
  CHECK(ts.barrier.size() == 1);
  CHECK(ts.odd_components.size() == 3);
  CHECK(f.valid_for(fpp));
  CHECK(f.to_json().find("\"kind\":\"tutte\"") != std::string::npos);

  CHECK(perfect_matching_certificate(disjoint_union(catalog("K4"), catalog("K4"))).has_perfect_matching());
  CHECK_THROWS_AS(perfect_matching_certificate(cycle_graph(5)), PreconditionError);
}

TEST_CASE("certificates agree with brute force and the small Tutte search") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 * (1 + static_cast<int>(rng() % 8));
    Graph g = random_graph(n, 0.1 + 0.4 * static_cast<double>(rng() % 10) / 10.0, rng);
    auto cert = perfect_matching_certificate(g);
    CHECK(cert.valid_for(g));
    CHECK(cert.has_perfect_matching() == (oracle::max_matching_size(g) == n / 2));
    // Tutte sets of size <= 3 exist exactly when the certificate's barrier is that small.
    if (!cert.has_perfect_matching() && std::get<TutteSet>(cert.payload).barrier.size() <= 3)
      CHECK(oracle::has_tutte_set(g, 3));
    if (cert.has_perfect_matching()) CHECK_FALSE(oracle::has_tutte_set(g, 3));
  }
}

TEST_CASE("class 1 implies a perfect matching") {
  for (const Graph& g : enumerate_cubic_up_to(12)) {
    if (chromatic_index(g).value == 3) CHECK(perfect_matching_certificate(g).has_perfect_matching());
  }
}

TEST_CASE("Hamiltonicity against plain search") {
  CHECK(is_hamiltonian(catalog("K4")));
  CHECK_FALSE(is_hamiltonian(catalog("petersen")));
  CHECK_FALSE(oracle::hamiltonian(catalog("petersen")));
  CHECK_FALSE(is_hamiltonian(disjoint_union(catalog("K4"), catalog("K4"))));
  for (const Graph& g : enumerate_cubic_up_to(10)) {
    auto cycle = hamiltonian_cycle(g);
    CHECK(!cycle.empty() == oracle::hamiltonian(g));
    if (cycle.empty()) continue;
    CHECK(static_cast<int>(cycle.size()) == g.order());
    for (std::size_t i = 0; i < cycle.size(); ++i) CHECK(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.45, rng);
    CHECK(is_hamiltonian(g) == oracle::hamiltonian(g));
  }
  CHECK_THROWS_AS(is_hamiltonian(cycle_graph(kHamiltonBudget + 1)), BudgetExceeded);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number_cubic(catalog("K4")) == 4);
  CHECK(chromatic_number_cubic(catalog("K33")) == 2);
  CHECK(chromatic_number_cubic(catalog("petersen")) == 3);
  Graph k4 = catalog("K4");
  Graph tk4 = truncate_full(k4);
  CHECK(chromatic_number_cubic(disjoint_union({catalog("cube"), tk4, tk4})) == 3);
  CHECK(chromatic_number_cubic(disjoint_union({k4, k4, bipartite_double(tk4)})) == 4);
  CHECK_THROWS_AS(chromatic_number_cubic(cycle_graph(4)), PreconditionError);

  CHECK(chromatic_number_small(line_graph(catalog("petersen"))) == 4);
  CHECK(chromatic_number_small(line_graph(k4)) == 3);
  CHECK(chromatic_number_small(cycle_graph(7)) == 3);
  CHECK_THROWS_AS(chromatic_number_small(cycle_graph(kChromaticNumberBudget + 1)), BudgetExceeded);

  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng);
    CHECK(chromatic_number_small(g) == oracle::chromatic_number(g));
  }
  for (const Graph& g : enumerate_cubic_up_to(10)) {
    CHECK(chromatic_number_cubic(g) == oracle::chromatic_number(g));
    CHECK(chromatic_number_small(line_graph(g)) == chromatic_index(g).value);
  }
}

}  // TEST_SUITE
