#include "neurobetti/oracle.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

#include "neurobetti/bitmatrix.hpp"
#include "neurobetti/errors.hpp"
#include "neurobetti/piercing.hpp"

namespace neurobetti {

namespace {

using VarMask = std::uint32_t;

/// Variables actually used by the generators, renumbered 0..m-1.
struct CompactIdeal {
  int m = 0;
  VarMask x_vars = 0;  // compact positions holding x variables
  VarMask y_vars = 0;
  std::vector<VarMask> gens;
};

CompactIdeal compact(const SquarefreeIdeal& ideal, const VariableSet* restrict_to) {
  NeuronSet used_x = 0;
  NeuronSet used_y = 0;
  if (restrict_to) {
    used_x = restrict_to->x;
    used_y = restrict_to->y;
  } else {
    for (const auto& g : ideal.gens()) {
      used_x |= g.x;
      used_y |= g.y;
    }
  }
  CompactIdeal c;
  std::vector<int> x_pos(32, -1);
  std::vector<int> y_pos(32, -1);
  for (int i = 0; i < 32; ++i) {
    if (used_x & neuron_bit(i)) {
      c.x_vars |= VarMask{1} << c.m;
      x_pos[i] = c.m++;
    }
  }
  for (int i = 0; i < 32; ++i) {
    if (used_y & neuron_bit(i)) {
      c.y_vars |= VarMask{1} << c.m;
      y_pos[i] = c.m++;
    }
  }
  for (const auto& g : ideal.gens()) {
    if (!is_subset(g.x, used_x) || !is_subset(g.y, used_y)) continue;
    VarMask mask = 0;
    for (int i = 0; i < 32; ++i) {
      if (g.x & neuron_bit(i)) mask |= VarMask{1} << x_pos[i];
      if (g.y & neuron_bit(i)) mask |= VarMask{1} << y_pos[i];
    }
    c.gens.push_back(mask);
  }
  return c;
}

struct Scratch {
  std::vector<std::int32_t> index;
  std::vector<std::vector<VarMask>> faces;  // by face size
  std::vector<std::uint64_t> ranks;
  BitMatrix matrix;
};

/// dims[k] = dim H~_{k-1} of the complex of faces inside sigma, k = 0..|sigma|.
template <class IsFace>
void reduced_homology(VarMask sigma, const IsFace& is_face, Scratch& s, std::vector<std::uint64_t>& dims) {
  const int size = std::popcount(sigma);
  s.faces.resize(std::max<std::size_t>(s.faces.size(), size + 1));
  for (int k = 0; k <= size; ++k) s.faces[k].clear();
  VarMask sub = 0;
  do {
    if (is_face(sub)) {
      auto& group = s.faces[std::popcount(sub)];
      s.index[sub] = static_cast<std::int32_t>(group.size());
      group.push_back(sub);
    }
    sub = (sub - sigma) & sigma;
  } while (sub != 0);

  // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  s.ranks.assign(size + 2, 0);
  if (size >= 1 && !s.faces[1].empty()) s.ranks[1] = 1;
  for (int k = 2; k <= size; ++k) {
    const auto& rows = s.faces[k];
    const auto& cols = s.faces[k - 1];
    if (rows.empty()) break;
    s.matrix.reset(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (VarMask rest = rows[r]; rest; rest &= rest - 1) {
        s.matrix.set(r, static_cast<std::size_t>(s.index[rows[r] & ~(rest & (~rest + 1))]));
      }
    }
    s.ranks[k] = s.matrix.eliminate();
  }
  dims.assign(size + 1, 0);
  for (int k = 0; k <= size; ++k) {
    dims[k] = s.faces[k].size() - s.ranks[k] - s.ranks[k + 1];
  }
}

void check_guard(const CompactIdeal& c, const OracleOptions& options) {
  if (c.m > 26 || (std::uint64_t{1} << c.m) > options.max_restrictions) {
    throw InputError("oracle needs 2^" + std::to_string(c.m) + " restrictions, above the limit of " +
                     std::to_string(options.max_restrictions));
  }
}

/// Dense accumulator over (w, u, v) with each coordinate in 0..m.
struct Accumulator {
  int m = 0;
  std::vector<std::uint64_t> cells;

  explicit Accumulator(int m_) : m(m_), cells(static_cast<std::size_t>(m_ + 1) * (m_ + 1) * (m_ + 1), 0) {}
  std::uint64_t& at(int w, int u, int v) { return cells[(static_cast<std::size_t>(w) * (m + 1) + u) * (m + 1) + v]; }

  void record(VarMask sigma, const CompactIdeal& c, const std::vector<std::uint64_t>& dims) {
    const int size = std::popcount(sigma);
    const int u = std::popcount(sigma & c.x_vars);
    const int v = std::popcount(sigma & c.y_vars);
    for (int k = 0; k <= size; ++k) {
      if (dims[k]) at(size - k, u, v) += dims[k];
    }
  }

  BettiTable to_table(int n) {
    BettiTable table(n);
    for (int w = 0; w <= m; ++w) {
      for (int u = 0; u <= m; ++u) {
        for (int v = 0; v <= m; ++v) table.add(w, u, v, at(w, u, v));
      }
    }
    return table;
  }
};

}  // namespace

HomologyResult restricted_homology(const SquarefreeIdeal& ideal, const VariableSet& sigma) {
  if (sigma.size() > kMaxRestrictedVariables) {
    throw InputError("restricted homology is limited to " + std::to_string(kMaxRestrictedVariables) + " variables");
  }
  const CompactIdeal c = compact(ideal, &sigma);
  const std::size_t space = std::size_t{1} << c.m;
  auto is_face = [&c](VarMask f) {
    return std::none_of(c.gens.begin(), c.gens.end(), [f](VarMask g) { return (g & ~f) == 0; });
  };
  Scratch scratch;
  scratch.index.assign(space, -1);
  HomologyResult result;
  reduced_homology(static_cast<VarMask>(space - 1), is_face, scratch, result.dims);
  return result;
}

BettiTable betti_table_oracle(const SquarefreeIdeal& ideal, const OracleOptions& options) {
  const CompactIdeal c = compact(ideal, nullptr);
  check_guard(c, options);
  const std::size_t space = std::size_t{1} << c.m;

  // nonface[F]: F contains a generator. cover[F]: union of the generators inside F.
  std::vector<std::uint8_t> nonface(space, 0);
  std::vector<VarMask> cover(space, 0);
  for (VarMask g : c.gens) {
    nonface[g] = 1;
    cover[g] = g;
  }
  for (int b = 0; b < c.m; ++b) {
    const VarMask bit = VarMask{1} << b;
    for (std::size_t f = 0; f < space; ++f) {
      if (f & bit) {
        nonface[f] |= nonface[f ^ bit];
        cover[f] |= cover[f ^ bit];
      }
    }
  }
  std::vector<VarMask> candidates;
  for (std::size_t f = 0; f < space; ++f) {
    if (cover[f] == f) candidates.push_back(static_cast<VarMask>(f));
  }

  Accumulator total(c.m);
  const int nthreads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    Accumulator local(c.m);
    Scratch scratch;
    scratch.index.assign(space, -1);
    std::vector<std::uint64_t> dims;
    auto is_face = [&nonface](VarMask f) { return nonface[f] == 0; };
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
      const VarMask sigma = candidates[static_cast<std::size_t>(i)];
      reduced_homology(sigma, is_face, scratch, dims);
      local.record(sigma, c, dims);
    }
#pragma omp critical(neurobetti_oracle_merge)
    for (std::size_t k = 0; k < total.cells.size(); ++k) total.cells[k] += local.cells[k];
  }
  return total.to_table(ideal.n());
}

BettiTable betti_table_oracle_serial(const SquarefreeIdeal& ideal, const OracleOptions& options) {
  const CompactIdeal c = compact(ideal, nullptr);
  check_guard(c, options);
  const std::size_t space = std::size_t{1} << c.m;
  auto is_face = [&c](VarMask f) {
    return std::none_of(c.gens.begin(), c.gens.end(), [f](VarMask g) { return (g & ~f) == 0; });
  };
  Accumulator total(c.m);
  Scratch scratch;
  scratch.index.assign(space, -1);
  std::vector<std::uint64_t> dims;
  for (std::size_t f = 0; f < space; ++f) {
    const auto sigma = static_cast<VarMask>(f);
    reduced_homology(sigma, is_face, scratch, dims);
    total.record(sigma, c, dims);
  }
  return total.to_table(ideal.n());
}

int regularity(const BettiTable& table, bool of_ideal) {
  bool any = false;
  int best = 0;
  for (const auto& [idx, count] : table.entries()) {
    const auto [w, u, v] = idx;
    if (of_ideal && w == 0) continue;
    const int value = of_ideal ? u + v - (w - 1) : u + v - w;
    best = any ? std::max(best, value) : value;
    any = true;
  }
  if (!any) {
    throw InputError(of_ideal ? "the zero ideal has no regularity" : "empty Betti table has no regularity");
  }
  return best;
}

int pdim(const BettiTable& table) { return table.max_degree(); }

RegularityVerdict regularity_characterization(const NeuralCode& code, const OracleOptions& options) {
  const auto diag = validate_code(code);
  if (diag.silent) {
    throw InputError("hypothesis violated: silent neurons " + format_set(diag.silent) +
                     " give degree-one canonical form elements");
  }
  if (!diag.duplicates.empty()) throw InputError("hypothesis violated: two neurons fire identically");
  const CanonicalForm cf = canonical_form(code, options.threads);
  if (cf.elements.empty()) throw InputError("hypothesis violated: the neural ideal is zero");
  for (const auto& f : cf.elements) {
    if (f.degree() != 2) throw InputError("hypothesis violated: canonical form contains " + to_string(f));
  }
  RegularityVerdict verdict;
  verdict.quadratic = true;
  verdict.reg_of_ideal = regularity(betti_table_oracle(polarized_ideal(cf, code.n()), options), true);
  verdict.pierced_by_definition = is_inductively_pierced(code).has_value();
  verdict.theorem_consistent = (verdict.quadratic && verdict.reg_of_ideal == 2) == verdict.pierced_by_definition;
  return verdict;
}

}  // namespace neurobetti
