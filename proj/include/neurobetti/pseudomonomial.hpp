#pragma once

#include <string>
#include <vector>

#include "neurobetti/code.hpp"

namespace neurobetti {

/// prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j), with sigma and tau disjoint.
struct PseudoMonomial {
  NeuronSet sigma = 0;
  NeuronSet tau = 0;

  int degree() const { return set_size(sigma) + set_size(tau); }
  friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;
};

/// Checked constructor; throws InputError when the supports overlap.
PseudoMonomial make_pseudo_monomial(NeuronSet sigma, NeuronSet tau);

/// True iff f evaluates to 0 at the codeword c.
inline bool vanishes_on(const PseudoMonomial& f, NeuronSet c) {
  return !(is_subset(f.sigma, c) && (f.tau & c) == 0);
}

inline bool divides(const PseudoMonomial& f, const PseudoMonomial& g) {
  return is_subset(f.sigma, g.sigma) && is_subset(f.tau, g.tau);
}

/// Degree first, then sigma, then tau, both compared as sorted index lists.
bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b);

/// "x1*x3", "x5*(1-x3)"; the constant 1 renders as "1".
std::string to_string(const PseudoMonomial& f);

struct CanonicalForm {
  std::vector<PseudoMonomial> elements;  // sorted by canonical_less

  int max_degree() const;
  bool has_degree(int d) const;
  /// Nonempty and every element of degree exactly two.
  bool all_quadratic() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Divisibility-minimal pseudo-monomials vanishing on every codeword.
///
/// A ternary sweep over all 3^n disjoint (sigma, tau) pairs decides for each pair whether some
/// codeword restricts to it; minimal vanishing pairs are then collected in parallel over the
/// pair space. threads <= 0 uses the OpenMP default.
CanonicalForm canonical_form(const NeuralCode& code, int threads = 0);

/// Reference implementation: every disjoint pair is checked against every codeword directly.
/// Kept for testing; exponential in n and linear in the code size per pair.
CanonicalForm canonical_form_serial(const NeuralCode& code);

}  // namespace neurobetti
