#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neurobetti/code.hpp"
#include "neurobetti/graph.hpp"
#include "neurobetti/polarize.hpp"
#include "neurobetti/pseudomonomial.hpp"

namespace neurobetti {

/// Steps in construction order; replaying them with build_code reproduces the code.
struct PiercingOrder {
  std::vector<PiercingStep> steps;

  /// Neuron labels in construction order (0-based).
  std::vector<int> neurons() const;
  friend bool operator==(const PiercingOrder&, const PiercingOrder&) = default;
};

/// Counts j_{k,l} of k-piercings contained in l other fields, with marginals j_k.
struct PiercingProfile {
  int n = 0;
  std::vector<std::int64_t> jkl;  // row-major n x n, index k * n + l
  std::vector<std::int64_t> jk;   // size n

  PiercingProfile() = default;
  explicit PiercingProfile(int n_) : n(n_), jkl(static_cast<std::size_t>(n_) * n_, 0), jk(n_, 0) {}

  std::int64_t at(int k, int l) const {
    return k < 0 || l < 0 || k >= n || l >= n ? 0 : jkl[static_cast<std::size_t>(k) * n + l];
  }
  std::int64_t marginal(int k) const { return k < 0 || k >= n ? 0 : jk[k]; }
  friend bool operator==(const PiercingProfile&, const PiercingProfile&) = default;
};

/// The unique (sigma, tau) making neuron i a piercing of the code, if any. sigma and tau are the
/// intersection and union of {c \ {i} : i in c}. Throws InputError if i never fires.
std::optional<PiercingStep> detect_piercing(const NeuralCode& code, int i);

/// A piercing order if the code is inductively pierced, found by backtracking with memoization on
/// failed subcodes. Throws InputError if the code has silent or duplicate neurons.
std::optional<PiercingOrder> is_inductively_pierced(const NeuralCode& code);

/// Every piercing order of the code (exhaustive backtracking). Limited to n <= 10.
std::vector<PiercingOrder> all_piercing_orders(const NeuralCode& code);

struct FastPiercedVerdict {
  bool pierced = false;
  CanonicalForm cf;
  /// Set when the canonical form is not purely quadratic: the first offending element.
  std::optional<PseudoMonomial> non_quadratic;
  std::optional<Graph> graph;
  std::optional<ChordalityResult> chordality;
};

/// Canonical form all of degree two and a chordal relationship graph. The full code (zero ideal)
/// counts as pierced. Throws InputError on silent or duplicate neurons.
FastPiercedVerdict is_inductively_pierced_fast(const NeuralCode& code);

PiercingProfile piercing_profile(const PiercingOrder& order);

/// Folds C <- C ∪ [sigma ∪ {i}, tau ∪ {i}] from {∅}. n defaults to the largest neuron used.
NeuralCode build_code(std::span<const PiercingStep> steps, int n = -1);

/// Label-ordered polarized ideal obtained by folding extend_ideal over the steps.
SquarefreeIdeal ideal_from_steps(std::span<const PiercingStep> steps, int n = -1);

struct GeneratedCode {
  PiercingOrder order;
  NeuralCode code;
};

/// Neuron m (0-based) pierces an interval of rank <= kmax drawn uniformly from all intervals
/// contained in the code on neurons 0..m-1. Deterministic for a given seed.
GeneratedCode random_pierced_code(int n, int kmax, std::uint64_t seed);

/// Every code reachable by label-ordered piercing sequences with n neurons and rank <= kmax,
/// deduplicated, each with the first sequence that produced it.
std::vector<GeneratedCode> enumerate_pierced_codes(int n, int kmax);

/// "step 5: sigma={3} tau={2,3} k=1 l=1"
std::string render_step(const PiercingStep& step);
std::string render_order(const PiercingOrder& order);
/// Parses render_order output (k= and l= are optional and checked when present).
PiercingOrder parse_steps(const std::string& text);

}  // namespace neurobetti
