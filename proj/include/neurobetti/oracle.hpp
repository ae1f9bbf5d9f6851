#pragma once

#include <cstdint>
#include <vector>

#include "neurobetti/betti.hpp"
#include "neurobetti/code.hpp"
#include "neurobetti/polarize.hpp"

namespace neurobetti {

struct OracleOptions {
  int threads = 0;                                 // <= 0: OpenMP default
  std::uint64_t max_restrictions = std::uint64_t{1} << 20;
};

/// Reduced simplicial homology over F2; dims[d + 1] = dim H~_d for d = -1, 0, 1, ...
struct HomologyResult {
  std::vector<std::uint64_t> dims;

  std::uint64_t dim(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d < -1 || i >= dims.size() ? 0 : dims[i];
  }
};

inline constexpr int kMaxRestrictedVariables = 24;

/// Homology of the Stanley-Reisner complex of the ideal restricted to the variables in sigma.
/// The empty face sits in degree -1, so sigma = {} gives H~_{-1} = F2.
HomologyResult restricted_homology(const SquarefreeIdeal& ideal, const VariableSet& sigma);

/// Multigraded Betti numbers of S/J via beta_{w,sigma} = dim H~_{|sigma|-w-1}(Delta|_sigma).
///
/// Only restrictions sigma that are unions of generator supports are visited (every other
/// restriction is a cone and acyclic); the sweep is split across OpenMP threads and merged by
/// integer addition, so the result does not depend on the schedule.
BettiTable betti_table_oracle(const SquarefreeIdeal& ideal, const OracleOptions& options = {});

/// Reference sweep: every subset of the used variables, faces tested against the generators
/// directly, single-threaded.
BettiTable betti_table_oracle_serial(const SquarefreeIdeal& ideal, const OracleOptions& options = {});

/// reg(S/J) = max{u + v - w}; with of_ideal, reg(J) = max{u + v - (w - 1) : w >= 1}.
/// Throws InputError when there is nothing to take the maximum over.
int regularity(const BettiTable& table, bool of_ideal);

/// Largest homological degree with a nonzero entry.
int pdim(const BettiTable& table);

struct RegularityVerdict {
  bool quadratic = false;
  int reg_of_ideal = 0;
  bool pierced_by_definition = false;
  /// (quadratic and reg(J) == 2) <=> pierced_by_definition
  bool theorem_consistent = false;
};

/// Checks "quadratic with reg(J) = 2 iff inductively pierced" on one code. Throws InputError when
/// the code has silent or duplicate neurons or its canonical form is empty or not purely quadratic.
RegularityVerdict regularity_characterization(const NeuralCode& code, const OracleOptions& options = {});

}  // namespace neurobetti
