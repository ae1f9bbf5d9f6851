#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "neurobetti/errors.hpp"

using namespace neurobetti;
using testing_helpers::key_code;
using testing_helpers::S;
using testing_helpers::W;

TEST_CASE("parse_code reads words, header, comments and the empty word") {
  const NeuralCode c = parse_code("0\n1\n2\n1 2\n");
  CHECK(c.n() == 2);
  CHECK(c == W(2, {"", "1", "2", "12"}));

  const NeuralCode key = parse_code("# example\nn=5\n0\n1\n2\n3\n4\n1 2\n1 4\n2 3\n2 4\n3 5\n1 2 4\n2 3 5\n");
  CHECK(key == key_code());
  CHECK(key.size() == 12);
}

TEST_CASE("parse_code rejects malformed input") {
  CHECK_THROWS_AS(parse_code("x\n"), InputError);
  CHECK_THROWS_AS(parse_code("1 -2\n"), InputError);
  CHECK_THROWS_AS(parse_code("n=2\n3\n"), InputError);
  CHECK_THROWS_AS(parse_code("1\nn=2\n"), InputError);
  CHECK_THROWS_AS(parse_code("n=17\n"), InputError);
  CHECK_THROWS_AS(parse_code("5\n", 4), InputError);
}

TEST_CASE("the empty word is always present") {
  const NeuralCode c = parse_code("1\n");
  CHECK(c.contains(0));
  CHECK(c.empty_word_inserted());
  CHECK_FALSE(parse_code("0\n1\n").empty_word_inserted());
  CHECK(NeuralCode(0, {}).size() == 1);
}

TEST_CASE("delete_neuron") {
  CHECK(delete_neuron(key_code(), 4) == W(4, {"", "1", "2", "3", "4", "12", "14", "23", "24", "124"}));
  CHECK(delete_neuron(W(1, {"", "1"}), 0) == W(0, {""}));
  CHECK(delete_neuron(W(2, {"", "1", "2", "12"}), 1) == W(1, {"", "1"}));
  // without reindexing the neuron stays as a silent one
  const NeuralCode kept = delete_neuron(W(3, {"", "13", "2"}), 0, false);
  CHECK(kept == W(3, {"", "3", "2"}));
  CHECK(validate_code(kept).silent == S({1}));
}

TEST_CASE("enumerate_interval") {
  CHECK(enumerate_interval(0, S({1, 2})) == std::vector<NeuronSet>{0, S({1}), S({2}), S({1, 2})});
  CHECK(enumerate_interval(S({3}), S({2, 3})) == std::vector<NeuronSet>{S({3}), S({2, 3})});
  CHECK(enumerate_interval(S({1}), S({1})) == std::vector<NeuronSet>{S({1})});
  CHECK_THROWS_AS(enumerate_interval(S({1}), S({2})), InputError);
}

TEST_CASE("validate_code") {
  CHECK(validate_code(key_code()).clean());
  CHECK(validate_code(W(2, {"", "1"})).silent == S({2}));
  const auto diag = validate_code(W(2, {"", "12"}));
  REQUIRE(diag.duplicates.size() == 1);
  CHECK(diag.duplicates[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("strip_silent reindexes") {
  CHECK(strip_silent(W(3, {"", "3"})) == W(1, {"", "1"}));
}

TEST_CASE("format_set and index_lex_less") {
  CHECK(format_set(S({1, 3})) == "{1,3}");
  CHECK(format_set(0) == "{}");
  CHECK(index_lex_less(S({1, 3}), S({1, 5})));
  CHECK(index_lex_less(S({1, 5}), S({3})));
  CHECK(index_lex_less(S({4, 5}), S({5})));
  CHECK_FALSE(index_lex_less(S({5}), S({4, 5})));
}

TEST_CASE("property: parse(serialize(c)) == c on random codes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<NeuronSet> words;
    const int count = static_cast<int>(rng() % 20);
    for (int i = 0; i < count; ++i) words.push_back(static_cast<NeuronSet>(rng()) & first_neurons(n));
    const NeuralCode c(n, words);
    CHECK(parse_code(serialize_code(c)) == c);
  }
}

TEST_CASE("property: deleting a silent neuron without reindexing changes nothing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<NeuronSet> words;
    for (int i = 0; i < 10; ++i) words.push_back(static_cast<NeuronSet>(rng()) & first_neurons(n));
    const NeuralCode c(n, words);
    const int i = static_cast<int>(rng() % n);
    const NeuralCode once = delete_neuron(c, i, false);
    CHECK(delete_neuron(once, i, false) == once);
  }
}

TEST_CASE("property: interval size is 2^(|tau|-|sigma|)") {
  for (NeuronSet tau = 0; tau < 64; ++tau) {
    for (NeuronSet sigma = tau;; sigma = (sigma - 1) & tau) {
      const auto words = enumerate_interval(sigma, tau);
      CHECK(words.size() == (std::size_t{1} << (set_size(tau) - set_size(sigma))));
      for (NeuronSet w : words) CHECK((is_subset(sigma, w) && is_subset(w, tau)));
      if (sigma == 0) break;
    }
  }
}
