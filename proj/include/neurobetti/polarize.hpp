#pragma once

#include <string>
#include <vector>

#include "neurobetti/code.hpp"
#include "neurobetti/pseudomonomial.hpp"

namespace neurobetti {

/// prod_{i in x} x_i * prod_{j in y} y_j in S = F2[x_1..x_n, y_1..y_n].
/// Multidegree is (|x|, |y|).
struct SquarefreeMonomial {
  NeuronSet x = 0;
  NeuronSet y = 0;

  int x_degree() const { return set_size(x); }
  int y_degree() const { return set_size(y); }
  int degree() const { return x_degree() + y_degree(); }
  bool divides(const SquarefreeMonomial& other) const { return is_subset(x, other.x) && is_subset(y, other.y); }
  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;
};

/// Degree, then x-support, then y-support (index-lexicographic).
bool canonical_less(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

/// "x1*x3", "x5*y3": x-block then y-block, each by index.
std::string to_string(const SquarefreeMonomial& m);

/// A squarefree monomial ideal in 2n variables, held by its minimal generators.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  /// Reduces gens to an antichain under divisibility and sorts them.
  SquarefreeIdeal(int n, std::vector<SquarefreeMonomial> gens);

  int n() const { return n_; }
  const std::vector<SquarefreeMonomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// True if some generator is divisible by x_i*y_i.
  bool has_xy_overlap() const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<SquarefreeMonomial> gens_;
};

/// Comma-separated generator list; "0" for the zero ideal.
std::string to_string(const SquarefreeIdeal& ideal);

/// One monomial per line, factors like "x3" or "y5" joined by "*"; "#" comments allowed.
SquarefreeIdeal parse_ideal(const std::string& text, int n_hint = 0);

inline SquarefreeMonomial polarize(const PseudoMonomial& f) { return {f.sigma, f.tau}; }

/// y_i -> 1 - x_i. Throws InputError if x_i*y_i divides m.
PseudoMonomial depolarize(const SquarefreeMonomial& m);

SquarefreeIdeal polarized_ideal(const CanonicalForm& cf, int n);

/// Adding neuron `neuron` as a k-piercing over the interval [sigma, tau] of the code built so far.
struct PiercingStep {
  int neuron = 0;  // 0-based
  NeuronSet sigma = 0;
  NeuronSet tau = 0;

  int k() const { return set_size(tau) - set_size(sigma); }
  int ell() const { return set_size(sigma); }
  friend bool operator==(const PiercingStep&, const PiercingStep&) = default;
};

/// Variable set generating a monomial prime: {x_i : i in x} ∪ {y_j : j in y}.
struct VariableSet {
  NeuronSet x = 0;
  NeuronSet y = 0;
  int size() const { return set_size(x) + set_size(y); }
  friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

/// (x_i : i in placed \ tau) + (y_j : j in sigma), where `placed` are the neurons already present.
VariableSet piercing_ideal(const PiercingStep& step, NeuronSet placed);
/// Label-ordered form: the step adds neuron n-1 (0-based) after neurons 0..n-2.
VariableSet piercing_ideal(const PiercingStep& step, int n);

/// J_prev + x_neuron * p, where p is the piercing ideal of the step. Throws InputError if the step is
/// malformed or if any old or new generator turns out to be redundant (the step was not a piercing).
SquarefreeIdeal extend_ideal(const SquarefreeIdeal& prev, const PiercingStep& step, NeuronSet placed);
/// Label-ordered form: requires step.neuron == prev.n().
SquarefreeIdeal extend_ideal(const SquarefreeIdeal& prev, const PiercingStep& step);

/// Replaces every y_i by x_i. Throws InputError if that would create a non-squarefree generator.
SquarefreeIdeal substitute_y_by_x(const SquarefreeIdeal& ideal);

}  // namespace neurobetti
