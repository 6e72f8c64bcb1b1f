#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "injv/catalog.hpp"
#include "injv/choose.hpp"
#include "injv/error.hpp"
#include "support/oracles.hpp"

using namespace injv;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

const Configuration& record(const std::string& name) {
  static const std::vector<Configuration> catalog = read_catalog_file(INJV_CATALOG);
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Configuration& c) { return c.name == name; });
  REQUIRE(it != catalog.end());
  return *it;
}

// Every d with 0 <= d(v) <= deg(v) and sum d = |E|.
void feasible_vectors(const Graph& g, std::vector<int>& d, int v, int left, std::vector<std::vector<int>>& out) {
  if (v == g.order()) {
    if (left == 0) out.push_back(d);
    return;
  }
  for (int x = 0; x <= std::min(left, g.degree(v)); ++x) {
    d[v] = x;
    feasible_vectors(g, d, v + 1, left - x, out);
  }
  d[v] = 0;
}

std::vector<std::vector<int>> feasible_vectors(const Graph& g) {
  std::vector<int> d(g.order(), 0);
  std::vector<std::vector<int>> out;
  feasible_vectors(g, d, 0, g.size(), out);
  return out;
}

}  // namespace

TEST_CASE("greedy: triangle with f = 1 gets stuck on the whole triangle") {
  const auto r = greedy_choosable(cycle(3), {1, 1, 1});
  CHECK_FALSE(r.choosable);
  CHECK(r.residual == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("greedy: edgeless graph with f = 1 peels") {
  const auto r = greedy_choosable(Graph(4), {1, 1, 1, 1});
  CHECK(r.choosable);
  CHECK(is_valid_peel_order(Graph(4), {1, 1, 1, 1}, r.order));
}

TEST_CASE("greedy: neighboring graph of C_2_2 with its declared sizes peels" * doctest::should_fail()) {
  const Configuration& c = record("C_2_2");
  CHECK(greedy_choosable(neighboring_graph(c.graph), c.declared_sizes).choosable);
}

TEST_CASE("C_2_2 with its declared sizes is choosable by exhaustive search") {
  const Configuration& c = record("C_2_2");
  const auto r = oracle_choosable(neighboring_graph(c.graph), c.declared_sizes, {24, 200'000'000});
  CHECK(r.choosable);
}

TEST_CASE("greedy peel orders replay and reject tampering") {
  const Graph g = cycle(6);
  const SizeVector f(6, 3);
  const auto r = greedy_choosable(g, f);
  REQUIRE(r.choosable);
  CHECK(is_valid_peel_order(g, f, r.order));
  CHECK_FALSE(is_valid_peel_order(g, SizeVector(6, 2), r.order));
  auto shorter = r.order;
  shorter.pop_back();
  CHECK_FALSE(is_valid_peel_order(g, f, shorter));
  CHECK_THROWS_AS(greedy_choosable(g, SizeVector(5, 3)), ValidationError);
}

TEST_CASE("greedy verdict does not depend on tie-breaking") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> size(1, 4);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 3 + t % 9, 0.35);
    SizeVector f(g.order());
    for (auto& x : f) x = size(rng);
    const bool base = greedy_choosable(g, f).choosable;
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const auto r = greedy_choosable(g, f, seed);
      REQUIRE(r.choosable == base);
      if (r.choosable) CHECK(is_valid_peel_order(g, f, r.order));
    }
  }
}

TEST_CASE("at_coefficient small cases") {
  Graph edge(2);
  edge.add_edge(0, 1);
  CHECK(at_coefficient(edge, {1, 0}) == 1);
  CHECK(at_coefficient(edge, {0, 1}) == -1);
  CHECK(at_coefficient(cycle(3), {1, 1, 1}) == 0);
  const auto c4 = at_coefficient(cycle(4), {1, 1, 1, 1});
  CHECK(std::abs(c4) == 2);
  CHECK(c4 == oracle::expanded_coefficient(cycle(4), {1, 1, 1, 1}));
  CHECK(at_coefficient(cycle(4), {2, 0, 2, 0}) == oracle::expanded_coefficient(cycle(4), {2, 0, 2, 0}));
  CHECK(at_coefficient(cycle(4), {3, 1, 0, 0}) == 0);
  CHECK(at_coefficient(Graph(3), {0, 0, 0}) == 1);
}

TEST_CASE("at_coefficient preconditions") {
  CHECK_THROWS_AS(at_coefficient(cycle(3), {1, 1, 0}), ValidationError);
  CHECK_THROWS_AS(at_coefficient(cycle(3), {1, 1}), ValidationError);
  CHECK_THROWS_AS(at_coefficient(cycle(3), {2, 2, -1}), ValidationError);
  Graph big(64);
  for (int i = 0; i < 63; ++i) big.add_edge(i, i + 1);
  std::vector<int> d(64, 1);
  d[63] = 0;
  CHECK_THROWS_AS(at_coefficient(big, d), CapacityError);
}

TEST_CASE("C3 coefficients vanish below the 2-choosability threshold") {
  int checked = 0;
  for (const auto& d : feasible_vectors(cycle(3))) {
    if (*std::max_element(d.begin(), d.end()) <= 1) {
      CHECK(at_coefficient(cycle(3), d) == 0);
      ++checked;
    } else {
      // a permutation of (2, 1, 0) is nonzero, (2, 0, 1) and the rest vanish
      std::vector<int> sorted = d;
      std::sort(sorted.begin(), sorted.end());
      CHECK((at_coefficient(cycle(3), d) != 0) == (sorted == std::vector<int>{0, 1, 2}));
    }
  }
  CHECK(checked == 1);
}

TEST_CASE("at_coefficient agrees with brute expansion and Eulerian sub-digraph counts") {
  std::mt19937_64 rng(8);
  int vectors = 0;
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 3 + t % 5, 0.5);
    if (g.size() > 10) continue;
    for (const auto& d : feasible_vectors(g)) {
      const auto fast = at_coefficient(g, d);
      REQUIRE(fast == oracle::expanded_coefficient(g, d));
      REQUIRE(fast == oracle::eulerian_coefficient(g, d));
      ++vectors;
    }
  }
  CHECK(vectors > 500);
}

TEST_CASE("at_choosable examples") {
  const auto c4 = at_choosable(cycle(4), {2, 2, 2, 2});
  CHECK(c4.choosable);
  CHECK(c4.witness == std::vector<int>{1, 1, 1, 1});
  CHECK(c4.coefficient != 0);
  CHECK_FALSE(at_choosable(cycle(3), {2, 2, 2}).choosable);
  CHECK(at_choosable(cycle(3), {3, 2, 2}).choosable);
  CHECK_FALSE(at_choosable(path(2), {0, 5}).choosable);
  CHECK(at_choosable(Graph(2), {0, 0}).choosable == false);
  CHECK(at_choosable(Graph(2), {1, 1}).choosable);
}

TEST_CASE("at_choosable on the neighboring graph of C_7_2") {
  const Configuration& c = record("C_7_2");
  const Graph sq = neighboring_graph(c.graph);
  const auto r = at_choosable(sq, c.declared_sizes);
  REQUIRE(r.choosable);
  for (Vertex v = 0; v < sq.order(); ++v) CHECK((*r.witness)[v] <= c.declared_sizes[v] - 1);
  CHECK(at_coefficient(sq, *r.witness) == r.coefficient);
}

TEST_CASE("at_choosable capacity") {
  AtLimits tiny;
  tiny.max_states = 2;
  CHECK_THROWS_AS(at_choosable(cycle(8), SizeVector(8, 3), tiny), CapacityError);
}

TEST_CASE("list_color examples") {
  const Graph k2 = path(2);
  CHECK_FALSE(list_color(k2, {{1}, {1}}).has_value());
  const auto phi = list_color(k2, {{1}, {1, 2}});
  REQUIRE(phi);
  CHECK(*phi == Coloring{1, 2});
  Graph k4(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  }
  const ListAssignment disjoint{{0, 1}, {2}, {3, 4}, {5}};
  const auto psi = list_color(k4, disjoint);
  REQUIRE(psi);
  CHECK(is_proper_list_coloring(k4, disjoint, *psi));
  CHECK_FALSE(is_proper_list_coloring(k4, disjoint, Coloring{0, 2, 3, 3}));
  CHECK_FALSE(list_color(k4, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}).has_value());
  CHECK(list_color(Graph(0), {}).has_value());
}

TEST_CASE("oracle examples") {
  const auto k2 = oracle_choosable(path(2), {1, 1});
  CHECK_FALSE(k2.choosable);
  REQUIRE(k2.bad_assignment);
  CHECK((*k2.bad_assignment)[0] == (*k2.bad_assignment)[1]);
  CHECK((*k2.bad_assignment)[0].size() == 1);
  CHECK(oracle_choosable(cycle(4), {2, 2, 2, 2}).choosable);
  CHECK_FALSE(oracle_choosable(cycle(3), {2, 2, 2}).choosable);
  CHECK_FALSE(oracle_choosable(cycle(5), {2, 2, 2, 2, 2}).choosable);
  // K_{2,4} is not 2-choosable; K_{2,3} is.
  Graph k23(5), k24(6);
  for (int a = 0; a < 2; ++a) {
    for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
    for (int b = 2; b < 6; ++b) k24.add_edge(a, b);
  }
  CHECK(oracle_choosable(k23, SizeVector(5, 2)).choosable);
  const auto r = oracle_choosable(k24, SizeVector(6, 2));
  CHECK_FALSE(r.choosable);
  REQUIRE(r.bad_assignment);
  CHECK_FALSE(list_color(k24, *r.bad_assignment).has_value());
}

TEST_CASE("oracle on the neighboring graph of X_2 finds a bad assignment") {
  const Configuration& c = record("X_2");
  const Graph sq = neighboring_graph(c.graph);
  const auto r = oracle_choosable(sq, c.declared_sizes, {24, 200'000'000});
  CHECK_FALSE(r.choosable);
  REQUIRE(r.bad_assignment);
  for (Vertex v = 0; v < sq.order(); ++v) CHECK(static_cast<int>((*r.bad_assignment)[v].size()) == c.declared_sizes[v]);
  CHECK_FALSE(list_color(sq, *r.bad_assignment).has_value());
}

TEST_CASE("oracle capacity limits") {
  CHECK_THROWS_AS(oracle_choosable(cycle(20), SizeVector(20, 2)), CapacityError);
  CHECK_THROWS_AS(oracle_choosable(cycle(20), SizeVector(20, 2), {30, 3}), CapacityError);
}

TEST_CASE("oracle agrees with the brute-force assignment enumeration") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> size(1, 2);
  for (int t = 0; t < 120; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + t % 4, 0.6);
    SizeVector f(g.order());
    for (auto& x : f) x = size(rng);
    const auto r = oracle_choosable(g, f);
    REQUIRE(r.choosable == oracle::brute_choosable(g, f));
    if (!r.choosable) CHECK_FALSE(list_color(g, *r.bad_assignment).has_value());
  }
}

TEST_CASE("soundness chain: greedy and Alon-Tarsi never beat the oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 3);
  for (int t = 0; t < 150; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 6, 0.45);
    SizeVector f(g.order());
    for (auto& x : f) x = size(rng);
    const bool truth = oracle_choosable(g, f).choosable;
    if (greedy_choosable(g, f).choosable) CHECK(truth);
    if (at_choosable(g, f).choosable) CHECK(truth);
  }
}

TEST_CASE("choosability is monotone in the list sizes") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> size(1, 2);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 5, 0.5);
    SizeVector f(g.order());
    for (auto& x : f) x = size(rng);
    if (!oracle_choosable(g, f).choosable) continue;
    for (Vertex v = 0; v < g.order(); ++v) {
      SizeVector bigger = f;
      ++bigger[v];
      CHECK(oracle_choosable(g, bigger).choosable);
    }
  }
}

TEST_CASE("injective_choosable examples") {
  const auto p3 = injective_choosable(path(3), SizeVector(3, 5), Method::automatic);
  CHECK(p3.outcome == Outcome::choosable);
  CHECK(p3.certified_by == Method::greedy);
  const auto c6 = injective_choosable(cycle(6), SizeVector(6, 3), Method::greedy);
  CHECK(c6.outcome == Outcome::choosable);
  const auto tight = injective_choosable(cycle(6), SizeVector(6, 2), Method::automatic);
  CHECK(tight.outcome == Outcome::not_choosable);
  CHECK(tight.certified_by == Method::oracle);
}

TEST_CASE("decide_choosable outcomes per method") {
  const Graph c4 = cycle(4);
  const SizeVector two(4, 2);
  CHECK(decide_choosable(c4, two, Method::greedy).outcome == Outcome::not_certified);
  const auto at = decide_choosable(c4, two, Method::alon_tarsi);
  CHECK(at.outcome == Outcome::choosable);
  CHECK(at.certified_by == Method::alon_tarsi);
  const auto autod = decide_choosable(c4, two, Method::automatic);
  CHECK(autod.outcome == Outcome::choosable);
  CHECK(autod.certified_by == Method::alon_tarsi);
  CHECK(autod.greedy.has_value());
  CHECK(decide_choosable(cycle(3), {2, 2, 2}, Method::alon_tarsi).outcome == Outcome::not_certified);
  CHECK(decide_choosable(cycle(3), {2, 2, 2}, Method::oracle).outcome == Outcome::not_choosable);
  const auto capped = decide_choosable(cycle(9), SizeVector(9, 2), Method::automatic, {4, 1000});
  CHECK(capped.outcome == Outcome::undecided);
  CHECK(to_string(Outcome::not_certified) == "not-certified");
  CHECK(parse_method("at") == Method::alon_tarsi);
  CHECK_FALSE(parse_method("kernel").has_value());
}

TEST_CASE("size and list files") {
  std::istringstream sizes("# sizes\n1 3\n0 2\n");
  CHECK(parse_sizes(sizes, 2) == SizeVector{2, 3});
  std::istringstream missing("0 2\n");
  CHECK_THROWS_AS(parse_sizes(missing, 2), ParseError);
  std::istringstream twice("0 2\n0 3\n");
  CHECK_THROWS_AS(parse_sizes(twice, 1), ParseError);

  std::istringstream lists("0 3 1\n1 2\n");
  const ListAssignment l = parse_lists(lists, 2);
  CHECK(l == ListAssignment{{1, 3}, {2}});
  std::stringstream text;
  write_lists(text, l);
  CHECK(parse_lists(text, 2) == l);
  std::istringstream repeated("0 1 1\n");
  CHECK_THROWS_AS(parse_lists(repeated, 1), ParseError);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(parse_lists(junk, 1), ParseError);
}
