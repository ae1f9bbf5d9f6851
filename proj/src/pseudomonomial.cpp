#include "neurobetti/pseudomonomial.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

#include "neurobetti/errors.hpp"

namespace neurobetti {

PseudoMonomial make_pseudo_monomial(NeuronSet sigma, NeuronSet tau) {
  if (sigma & tau) {
    throw InputError("pseudo-monomial supports overlap at " + format_set(sigma & tau));
  }
  return {sigma, tau};
}

bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.sigma != b.sigma) return index_lex_less(a.sigma, b.sigma);
  return index_lex_less(a.tau, b.tau);
}

std::string to_string(const PseudoMonomial& f) {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  for (int i = 0; i < 32; ++i) {
    if (f.sigma & neuron_bit(i)) append("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < 32; ++i) {
    if (f.tau & neuron_bit(i)) append("(1-x" + std::to_string(i + 1) + ")");
  }
  return out.empty() ? "1" : out;
}

int CanonicalForm::max_degree() const {
  int d = 0;
  for (const auto& f : elements) d = std::max(d, f.degree());
  return d;
}

bool CanonicalForm::has_degree(int d) const {
  return std::any_of(elements.begin(), elements.end(), [d](const PseudoMonomial& f) { return f.degree() == d; });
}

bool CanonicalForm::all_quadratic() const {
  return !elements.empty() &&
         std::all_of(elements.begin(), elements.end(), [](const PseudoMonomial& f) { return f.degree() == 2; });
}

namespace {

std::vector<std::uint64_t> powers_of_three(int n) {
  std::vector<std::uint64_t> p(n + 1, 1);
  for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * 3;
  return p;
}

/// Digit d at position i: 0 -> i in tau (must be off), 1 -> i in sigma (must be on), 2 -> free.
void decode_ternary(std::uint64_t idx, int n, NeuronSet& sigma, NeuronSet& tau) {
  sigma = 0;
  tau = 0;
  for (int i = 0; i < n; ++i) {
    const auto digit = idx % 3;
    idx /= 3;
    if (digit == 0) tau |= neuron_bit(i);
    if (digit == 1) sigma |= neuron_bit(i);
  }
}

}  // namespace

CanonicalForm canonical_form(const NeuralCode& code, int threads) {
  const int n = code.n();
  const auto pow3 = powers_of_three(n);
  const std::uint64_t states = pow3[n];
  const NeuronSet all = first_neurons(n);

  // occurs[idx] = 1 iff some codeword c has c ∩ (sigma ∪ tau) = sigma.
  std::vector<std::uint8_t> occurs(states, 0);
  {
    NeuronSet sigma = 0;
    NeuronSet tau = all;
    std::vector<int> digits(n, 0);
    for (std::uint64_t idx = 0; idx < states; ++idx) {
      const NeuronSet free = all & ~(sigma | tau);
      if (free == 0) {
        occurs[idx] = code.contains(sigma) ? 1 : 0;
      } else {
        const int i = std::countr_zero(free);
        occurs[idx] = occurs[idx - 2 * pow3[i]] | occurs[idx - pow3[i]];
      }
      // Ternary increment, keeping sigma/tau in step with the digits.
      for (int i = 0; i < n; ++i) {
        const NeuronSet bit = neuron_bit(i);
        if (digits[i] == 0) {
          digits[i] = 1;
          tau &= ~bit;
          sigma |= bit;
          break;
        }
        if (digits[i] == 1) {
          digits[i] = 2;
          sigma &= ~bit;
          break;
        }
        digits[i] = 0;
        tau |= bit;
      }
    }
  }

  // A vanishing pair is minimal iff freeing any single constrained position makes it occur.
  std::vector<PseudoMonomial> found;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<PseudoMonomial> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(states); ++s) {
      const auto idx = static_cast<std::uint64_t>(s);
      if (occurs[idx]) continue;
      NeuronSet sigma = 0;
      NeuronSet tau = 0;
      decode_ternary(idx, n, sigma, tau);
      bool minimal = true;
      for (NeuronSet rest = sigma; rest && minimal; rest &= rest - 1) {
        minimal = occurs[idx + pow3[std::countr_zero(rest)]] != 0;
      }
      for (NeuronSet rest = tau; rest && minimal; rest &= rest - 1) {
        minimal = occurs[idx + 2 * pow3[std::countr_zero(rest)]] != 0;
      }
      if (minimal) local.push_back({sigma, tau});
    }
#pragma omp critical(neurobetti_cf_merge)
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return CanonicalForm{std::move(found)};
}

CanonicalForm canonical_form_serial(const NeuralCode& code) {
  const int n = code.n();
  const NeuronSet all = first_neurons(n);
  auto in_ideal = [&code](NeuronSet sigma, NeuronSet tau) {
    const PseudoMonomial f{sigma, tau};
    return std::all_of(code.words().begin(), code.words().end(), [&f](NeuronSet c) { return vanishes_on(f, c); });
  };
  std::vector<PseudoMonomial> found;
  for (NeuronSet support = 0;; ++support) {
    for (NeuronSet sigma = support;; sigma = (sigma - 1) & support) {
      const NeuronSet tau = support & ~sigma;
      if (in_ideal(sigma, tau)) {
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i) {
          const NeuronSet bit = neuron_bit(i);
          if (sigma & bit) minimal = !in_ideal(sigma & ~bit, tau);
          if (tau & bit) minimal = !in_ideal(sigma, tau & ~bit);
        }
        if (minimal) found.push_back({sigma, tau});
      }
      if (sigma == 0) break;
    }
    if (support == all) break;
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return CanonicalForm{std::move(found)};
}

}  // namespace neurobetti
