#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "helpers.hpp"
#include "neurobetti/bitmatrix.hpp"
#include "neurobetti/errors.hpp"
#include "neurobetti/graph.hpp"
#include "neurobetti/oracle.hpp"

using namespace neurobetti;
using testing_helpers::key_code;
using testing_helpers::S;
using testing_helpers::W;

namespace {

SquarefreeMonomial M(NeuronSet x, NeuronSet y) { return {x, y}; }

SquarefreeIdeal polarized(const NeuralCode& code) { return polarized_ideal(canonical_form(code), code.n()); }

std::vector<oracles::Mask> taylor_masks(const SquarefreeIdeal& ideal) {
  std::vector<oracles::Mask> out;
  for (const auto& g : ideal.gens()) out.push_back(g.x | (g.y << 16));
  return out;
}

SquarefreeIdeal random_ideal(std::mt19937_64& rng, int n, int count, bool with_y) {
  std::vector<SquarefreeMonomial> gens;
  for (int i = 0; i < count; ++i) {
    NeuronSet x = static_cast<NeuronSet>(rng()) & first_neurons(n);
    NeuronSet y = with_y ? static_cast<NeuronSet>(rng()) & first_neurons(n) & ~x : 0;
    if (!x && !y) x = neuron_bit(static_cast<int>(rng() % n));
    gens.push_back({x, y});
  }
  return SquarefreeIdeal(n, gens);
}

}  // namespace

TEST_CASE("BitMatrix rank") {
  BitMatrix m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);
  CHECK(m.eliminate() == 2);  // rows sum to zero over F2

  BitMatrix wide(2, 130);
  wide.set(0, 129);
  wide.set(1, 64);
  wide.set(1, 129);
  CHECK(wide.get(1, 64));
  CHECK(wide.eliminate() == 2);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 90;
    BitMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id.set(i, i);
    CHECK(id.eliminate() == n);
  }
  BitMatrix empty(0, 5);
  CHECK(empty.eliminate() == 0);
}

TEST_CASE("restricted homology") {
  const SquarefreeIdeal edge(2, {M(S({1, 2}), 0)});
  CHECK(restricted_homology(edge, {S({1, 2}), 0}).dim(0) == 1);

  const SquarefreeIdeal zero(3, {});
  const HomologyResult simplex = restricted_homology(zero, {S({1, 2, 3}), S({1})});
  for (int d = -1; d <= 4; ++d) CHECK(simplex.dim(d) == 0);
  CHECK(restricted_homology(zero, {0, 0}).dim(-1) == 1);

  const SquarefreeIdeal cycle(4, {M(S({1, 3}), 0), M(S({2, 4}), 0)});
  const HomologyResult h = restricted_homology(cycle, {S({1, 2, 3, 4}), 0});
  CHECK(h.dim(1) == 1);
  CHECK(h.dim(0) == 0);

  // a generator x1 makes {x1} alone a complex with only the empty face
  CHECK(restricted_homology(SquarefreeIdeal(1, {M(S({1}), 0)}), {S({1}), 0}).dim(-1) == 1);
  CHECK_THROWS_AS(restricted_homology(zero, {first_neurons(13), first_neurons(12)}), InputError);
}

TEST_CASE("oracle tables for the three small ideals") {
  const SquarefreeIdeal j1(4, {M(S({1, 3}), 0), M(S({2, 4}), 0)});
  const SquarefreeIdeal j2(4, {M(S({1, 4}), 0), M(S({3, 4}), 0)});
  const SquarefreeIdeal j3(4, {M(S({1, 4}), 0), M(S({4}), S({3}))});

  const BettiTable t1 = betti_table_oracle(j1);
  CHECK(t1.at(1, 2, 0) == 2);
  CHECK(t1.at(2, 4, 0) == 1);
  CHECK(t1.entries().size() == 3);
  CHECK(regularity(t1, true) == 3);
  CHECK(pdim(t1) == 2);

  const BettiTable t2 = betti_table_oracle(j2);
  CHECK(t2.at(1, 2, 0) == 2);
  CHECK(t2.at(2, 3, 0) == 1);
  CHECK(regularity(t2, true) == 2);

  const BettiTable t3 = betti_table_oracle(j3);
  CHECK(t3.at(1, 2, 0) == 1);
  CHECK(t3.at(1, 1, 1) == 1);
  CHECK(t3.at(2, 2, 1) == 1);
  CHECK(t3.graded() == t2.graded());
  CHECK_FALSE(t3 == t2);
}

TEST_CASE("oracle on the example and the zero ideal") {
  const BettiTable t = betti_table_oracle(polarized(key_code()));
  CHECK(t.total() == std::vector<std::uint64_t>{1, 5, 6, 2});
  CHECK(pdim(t) == 3);
  CHECK(regularity(t, true) == 2);
  CHECK(regularity(t, false) == 1);

  const BettiTable zero = betti_table_oracle(SquarefreeIdeal(3, {}));
  CHECK(zero == base_table(3));
  CHECK(regularity(zero, false) == 0);
  CHECK(pdim(zero) == 0);
  CHECK_THROWS_AS(regularity(zero, true), InputError);
  CHECK_THROWS_AS(regularity(BettiTable(2), false), InputError);
}

TEST_CASE("oracle guard") {
  std::vector<SquarefreeMonomial> gens;
  for (int i = 0; i < 10; ++i) gens.push_back(M(neuron_bit(i), neuron_bit(i + 1)));
  const SquarefreeIdeal big(11, gens);  // 20 variables
  OracleOptions tight;
  tight.max_restrictions = 1024;
  CHECK_THROWS_AS(betti_table_oracle(big, tight), InputError);
  CHECK_THROWS_AS(betti_table_oracle_serial(big, tight), InputError);
  CHECK_NOTHROW(betti_table_oracle(big));
}

TEST_CASE("regularity characterization") {
  const RegularityVerdict key = regularity_characterization(key_code());
  CHECK(key.quadratic);
  CHECK(key.reg_of_ideal == 2);
  CHECK(key.pierced_by_definition);
  CHECK(key.theorem_consistent);

  const RegularityVerdict cycle = regularity_characterization(W(4, {"", "1", "2", "3", "4", "12", "14", "23", "34"}));
  CHECK(cycle.reg_of_ideal == 3);
  CHECK_FALSE(cycle.pierced_by_definition);
  CHECK(cycle.theorem_consistent);

  CHECK_THROWS_AS(regularity_characterization(W(3, {"", "1", "2", "3", "12", "13", "23"})), InputError);
  CHECK_THROWS_AS(regularity_characterization(W(2, {"", "1"})), InputError);
  CHECK_THROWS_AS(regularity_characterization(W(2, {"", "12"})), InputError);
  CHECK_THROWS_AS(regularity_characterization(W(2, {"", "1", "2", "12"})), InputError);
}

TEST_CASE("property: parallel and serial sweeps are identical") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const SquarefreeIdeal ideal = random_ideal(rng, n, 1 + static_cast<int>(rng() % 7), trial % 2 == 0);
    const BettiTable serial = betti_table_oracle_serial(ideal);
    for (int threads : {1, 2, 4}) {
      OracleOptions options;
      options.threads = threads;
      CHECK(betti_table_oracle(ideal, options) == serial);
    }
  }
}

TEST_CASE("property: Hochster sanity and Taylor Euler characteristic") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 5;
    const SquarefreeIdeal ideal = random_ideal(rng, n, 1 + static_cast<int>(rng() % 6), trial % 3 != 0);
    const BettiTable t = betti_table_oracle(ideal);
    CHECK(t.at(0, 0, 0) == 1);

    std::map<std::pair<int, int>, std::uint64_t> by_degree;
    for (const auto& g : ideal.gens()) ++by_degree[{g.x_degree(), g.y_degree()}];
    for (const auto& [idx, count] : t.entries()) {
      if (idx[0] == 1) CHECK(count == by_degree[{idx[1], idx[2]}]);
    }
    for (const auto& [deg, count] : by_degree) CHECK(t.at(1, deg.first, deg.second) == count);

    NeuronSet used_x = 0;
    NeuronSet used_y = 0;
    for (const auto& g : ideal.gens()) {
      used_x |= g.x;
      used_y |= g.y;
    }
    CHECK(t.max_degree() <= set_size(used_x) + set_size(used_y));

    std::map<std::pair<int, int>, std::int64_t> euler;
    for (const auto& [idx, count] : t.entries()) {
      euler[{idx[1], idx[2]}] += (idx[0] % 2 ? -1 : 1) * static_cast<std::int64_t>(count);
    }
    std::erase_if(euler, [](const auto& kv) { return kv.second == 0; });
    CHECK(euler == oracles::taylor_euler(taylor_masks(ideal)));
  }
}

TEST_CASE("property: replacing y by x keeps the Betti table of pierced codes") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const GeneratedCode g = random_pierced_code(n, n, seed);
    const SquarefreeIdeal ideal = polarized(g.code);
    const SquarefreeIdeal flat = substitute_y_by_x(ideal);
    if (flat.gens().size() != ideal.gens().size()) continue;
    CHECK(betti_table_oracle(flat).graded() == betti_table_oracle(ideal).graded());
  }
}

TEST_CASE("property: quadratic pure-x ideals have regularity 2 iff the complement graph is chordal") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    std::vector<SquarefreeMonomial> gens;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) gens.push_back(M(neuron_bit(i) | neuron_bit(j), 0));
      }
    }
    if (gens.empty()) continue;
    const SquarefreeIdeal ideal(n, gens);
    const bool linear = regularity(betti_table_oracle(ideal), true) == 2;
    CHECK(linear == chordality(relationship_graph(ideal)).chordal());
  }
}
