#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "helpers.hpp"
#include "neurobetti/errors.hpp"
#include "neurobetti/graph.hpp"

using namespace neurobetti;
using testing_helpers::key_code;
using testing_helpers::S;

namespace {

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i - 1, j - 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

std::vector<oracles::Mask> adjacency(const Graph& g) {
  std::vector<oracles::Mask> adj;
  for (int i = 0; i < g.n(); ++i) adj.push_back(g.neighbors(i));
  return adj;
}

Graph from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

bool is_induced_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return false;
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (static_cast<int>(distinct.size()) != len) return false;
  for (int a = 0; a < len; ++a) {
    for (int b = a + 1; b < len; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
      if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("relationship graph of the example") {
  const Graph g = relationship_graph(polarized_ideal(canonical_form(key_code()), 5));
  CHECK(g == make_graph(5, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}));
  CHECK(chordality(g).chordal());
}

TEST_CASE("relationship graph edge cases") {
  CHECK(relationship_graph(SquarefreeIdeal(3, {})) == complete(3));
  CHECK(relationship_graph(SquarefreeIdeal(2, {{S({1, 2}), 0}})).edges().empty());
  CHECK_THROWS_AS(relationship_graph(SquarefreeIdeal(3, {{S({1, 2, 3}), 0}})), InputError);
}

TEST_CASE("chordality") {
  const ChordalityResult c4 = chordality(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK_FALSE(c4.chordal());
  CHECK(c4.chordless_cycle.size() == 4);
  const ChordalityResult k4 = chordality(complete(4));
  REQUIRE(k4.chordal());
  CHECK(degree_multiset(k4.ordering->degrees) == std::vector<int>{0, 1, 2, 3});
  CHECK(chordality(Graph(0)).chordal());
}

TEST_CASE("simplicial_degree_profile") {
  const Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
  CHECK(simplicial_degree_profile(p3, {0, 1, 2}) == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(simplicial_degree_profile(p3, {1, 0, 2}), InputError);
  CHECK_THROWS_AS(simplicial_degree_profile(p3, {0, 0, 2}), InputError);
  CHECK(simplicial_degree_profile(complete(3), {2, 0, 1}) == std::vector<int>{2, 1, 0});
  CHECK(simplicial_degree_profile(Graph(1), {0}) == std::vector<int>{0});
}

TEST_CASE("elimination ordering enumeration") {
  CHECK(all_elimination_orderings(complete(2)).size() == 2);
  std::set<std::vector<int>> p3;
  for (const auto& e : all_elimination_orderings(make_graph(3, {{1, 2}, {2, 3}}))) p3.insert(e.order);
  CHECK(p3 == std::set<std::vector<int>>{{0, 1, 2}, {0, 2, 1}, {2, 0, 1}, {2, 1, 0}});
  CHECK(all_elimination_orderings(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})).empty());
  CHECK_THROWS_AS(all_elimination_orderings(Graph(10)), InputError);
}

TEST_CASE("parse_graph and rendering") {
  const Graph g = parse_graph("n=3\n1-2\n2 3\n");
  CHECK(g == make_graph(3, {{1, 2}, {2, 3}}));
  CHECK(render_edges(g) == "1-2\n2-3\n");
  CHECK(parse_graph(render_edges(g)) == g);
  CHECK_THROWS_AS(parse_graph("1-1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("1-x\n"), InputError);
}

TEST_CASE("property: chordality agrees with brute-force chordless cycle search, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = from_edge_mask(n, mask);
      const ChordalityResult r = chordality(g);
      const bool brute = !oracles::has_chordless_cycle(adjacency(g));
      REQUIRE(r.chordal() == brute);
      if (r.chordal()) {
        CHECK(simplicial_degree_profile(g, r.ordering->order) == r.ordering->degrees);
      } else {
        CHECK(is_induced_chordless_cycle(g, r.chordless_cycle));
      }
    }
  }
}

TEST_CASE("property: chordal iff some simplicial elimination ordering exists, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = from_edge_mask(n, mask);
      const auto orderings = all_elimination_orderings(g);
      CHECK(chordality(g).chordal() == !orderings.empty());
      for (const auto& e : orderings) CHECK(simplicial_degree_profile(g, e.order) == e.degrees);
    }
  }
}
