#include "neurobetti/polarize.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "neurobetti/errors.hpp"

namespace neurobetti {

bool canonical_less(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.x != b.x) return index_lex_less(a.x, b.x);
  return index_lex_less(a.y, b.y);
}

std::string to_string(const SquarefreeMonomial& m) {
  std::string out;
  auto append = [&out](char var, int i) {
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(i + 1);
  };
  for (int i = 0; i < 32; ++i) {
    if (m.x & neuron_bit(i)) append('x', i);
  }
  for (int i = 0; i < 32; ++i) {
    if (m.y & neuron_bit(i)) append('y', i);
  }
  return out.empty() ? "1" : out;
}

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<SquarefreeMonomial> gens) : n_(n) {
  const NeuronSet allowed = first_neurons(n);
  for (const auto& g : gens) {
    if (!is_subset(g.x | g.y, allowed)) {
      throw InputError("generator " + to_string(g) + " uses a variable above index " + std::to_string(n));
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) { return canonical_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so any divisor of gens[i] precedes it.
  for (const auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&g](const SquarefreeMonomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

bool SquarefreeIdeal::has_xy_overlap() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const SquarefreeMonomial& g) { return (g.x & g.y) != 0; });
}

std::string to_string(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

SquarefreeIdeal parse_ideal(const std::string& text, int n_hint) {
  std::vector<SquarefreeMonomial> gens;
  int n = n_hint;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line;
    for (char c : raw) {
      if (c != ' ' && c != '\t' && c != '\r') line += c;
    }
    if (line.empty() || line.front() == '#') continue;
    SquarefreeMonomial m;
    std::istringstream factors(line);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      const auto fail = [&] {
        throw InputError("line " + std::to_string(line_no) + ": bad factor '" + factor + "'");
      };
      if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'y')) fail();
      int idx = 0;
      const auto* end = factor.data() + factor.size();
      auto [ptr, ec] = std::from_chars(factor.data() + 1, end, idx);
      if (ec != std::errc{} || ptr != end || idx <= 0 || idx > kMaxNeurons) fail();
      NeuronSet& block = factor[0] == 'x' ? m.x : m.y;
      if (block & neuron_bit(idx - 1)) {
        throw InputError("line " + std::to_string(line_no) + ": monomial is not squarefree");
      }
      block |= neuron_bit(idx - 1);
      n = std::max(n, idx);
    }
    gens.push_back(m);
  }
  return SquarefreeIdeal(n, std::move(gens));
}

PseudoMonomial depolarize(const SquarefreeMonomial& m) {
  if (m.x & m.y) {
    throw InputError("cannot depolarize " + to_string(m) + ": divisible by x_i*y_i");
  }
  return {m.x, m.y};
}

SquarefreeIdeal polarized_ideal(const CanonicalForm& cf, int n) {
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(cf.elements.size());
  for (const auto& f : cf.elements) gens.push_back(polarize(f));
  return SquarefreeIdeal(n, std::move(gens));
}

namespace {

void check_step(const PiercingStep& step, NeuronSet placed) {
  if (step.neuron < 0 || step.neuron >= kMaxNeurons) {
    throw InputError("piercing step neuron " + std::to_string(step.neuron + 1) + " out of range");
  }
  if (placed & neuron_bit(step.neuron)) {
    throw InputError("piercing step reuses neuron " + std::to_string(step.neuron + 1));
  }
  if (!is_subset(step.sigma, step.tau)) {
    throw InputError("piercing step " + std::to_string(step.neuron + 1) + ": sigma not contained in tau");
  }
  if (!is_subset(step.tau, placed)) {
    throw InputError("piercing step " + std::to_string(step.neuron + 1) + ": tau mentions neurons not yet placed");
  }
}

}  // namespace

VariableSet piercing_ideal(const PiercingStep& step, NeuronSet placed) {
  check_step(step, placed);
  return {placed & ~step.tau, step.sigma};
}

VariableSet piercing_ideal(const PiercingStep& step, int n) {
  if (step.neuron != n - 1) {
    throw InputError("label-ordered piercing ideal expects neuron " + std::to_string(n) + ", got " +
                     std::to_string(step.neuron + 1));
  }
  return piercing_ideal(step, first_neurons(n - 1));
}

SquarefreeIdeal extend_ideal(const SquarefreeIdeal& prev, const PiercingStep& step, NeuronSet placed) {
  const VariableSet p = piercing_ideal(step, placed);
  const NeuronSet xn = neuron_bit(step.neuron);
  std::vector<SquarefreeMonomial> gens = prev.gens();
  for (NeuronSet rest = p.x; rest; rest &= rest - 1) {
    gens.push_back({xn | (rest & (~rest + 1)), 0});
  }
  for (NeuronSet rest = p.y; rest; rest &= rest - 1) {
    gens.push_back({xn, rest & (~rest + 1)});
  }
  const std::size_t expected = gens.size();
  SquarefreeIdeal next(std::max(prev.n(), step.neuron + 1), std::move(gens));
  if (next.gens().size() != expected) {
    throw InputError("piercing step for neuron " + std::to_string(step.neuron + 1) +
                     " produced redundant generators; the step is not a valid piercing");
  }
  return next;
}

SquarefreeIdeal extend_ideal(const SquarefreeIdeal& prev, const PiercingStep& step) {
  if (step.neuron != prev.n()) {
    throw InputError("label-ordered extension expects neuron " + std::to_string(prev.n() + 1) + ", got " +
                     std::to_string(step.neuron + 1));
  }
  return extend_ideal(prev, step, first_neurons(prev.n()));
}

SquarefreeIdeal substitute_y_by_x(const SquarefreeIdeal& ideal) {
  std::vector<SquarefreeMonomial> gens;
  for (const auto& g : ideal.gens()) {
    if (g.x & g.y) {
      throw InputError("substituting y by x in " + to_string(g) + " is not squarefree");
    }
    gens.push_back({g.x | g.y, 0});
  }
  return SquarefreeIdeal(ideal.n(), std::move(gens));
}

}  // namespace neurobetti
