#include "neurobetti/piercing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "neurobetti/errors.hpp"

namespace neurobetti {

std::vector<int> PiercingOrder::neurons() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.neuron);
  return out;
}

namespace {

using Words = std::vector<NeuronSet>;

struct WordsHash {
  std::size_t operator()(const Words& w) const noexcept {
    std::size_t h = w.size();
    for (NeuronSet x : w) h ^= std::hash<NeuronSet>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::optional<PiercingStep> detect_in_words(const Words& words, int i) {
  const NeuronSet bit = neuron_bit(i);
  NeuronSet sigma = ~NeuronSet{0};
  NeuronSet tau = 0;
  std::size_t count = 0;
  for (NeuronSet w : words) {
    if (!(w & bit)) continue;
    sigma &= w & ~bit;
    tau |= w & ~bit;
    ++count;
  }
  if (count == 0) return std::nullopt;
  // The i-words, with i removed, are distinct members of [sigma, tau]; they fill it iff the count matches.
  if (count != (std::size_t{1} << (set_size(tau) - set_size(sigma)))) return std::nullopt;
  for (NeuronSet w : words) {
    if ((w & bit) && !std::binary_search(words.begin(), words.end(), w & ~bit)) return std::nullopt;
  }
  return PiercingStep{i, sigma, tau};
}

Words delete_from_words(const Words& words, int i) {
  Words out;
  out.reserve(words.size());
  for (NeuronSet w : words) out.push_back(w & ~neuron_bit(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_clean(const NeuralCode& code) {
  const auto diag = validate_code(code);
  if (diag.silent) {
    throw InputError("code has silent neurons " + format_set(diag.silent) + "; strip them first");
  }
  if (!diag.duplicates.empty()) {
    const auto [a, b] = diag.duplicates.front();
    throw InputError("neurons " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                     " fire identically; merge them first");
  }
}

class OrderSearch {
 public:
  /// Removal steps are appended in removal order (reverse of construction).
  bool find_one(const Words& words, NeuronSet remaining, std::vector<PiercingStep>& removal) {
    if (remaining == 0) return words.size() == 1;
    // Highest label first so label-ordered codes come back in label order.
    for (int i = 31; i >= 0; --i) {
      if (!(remaining & neuron_bit(i))) continue;
      const auto step = detect_in_words(words, i);
      if (!step) continue;
      Words rest = delete_from_words(words, i);
      if (failed_.contains(rest)) continue;
      removal.push_back(*step);
      if (find_one(rest, remaining & ~neuron_bit(i), removal)) return true;
      removal.pop_back();
      failed_.insert(std::move(rest));
    }
    return false;
  }

  /// Returns whether any complete order exists below this code.
  bool find_all(const Words& words, NeuronSet remaining, std::vector<PiercingStep>& removal,
                std::vector<PiercingOrder>& out) {
    if (remaining == 0) {
      if (words.size() != 1) return false;
      out.push_back(PiercingOrder{{removal.rbegin(), removal.rend()}});
      return true;
    }
    bool any = false;
    for (int i = 31; i >= 0; --i) {
      if (!(remaining & neuron_bit(i))) continue;
      const auto step = detect_in_words(words, i);
      if (!step) continue;
      Words rest = delete_from_words(words, i);
      if (failed_.contains(rest)) continue;
      removal.push_back(*step);
      const bool ok = find_all(rest, remaining & ~neuron_bit(i), removal, out);
      removal.pop_back();
      if (ok) {
        any = true;
      } else {
        failed_.insert(std::move(rest));
      }
    }
    return any;
  }

 private:
  std::unordered_set<Words, WordsHash> failed_;
};

/// Membership bitmap over all subsets of the first n neurons.
class WordBitmap {
 public:
  explicit WordBitmap(int n) : bits_((std::size_t{1} << n) / 64 + 1, 0) {}
  void insert(NeuronSet w) { bits_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  bool contains(NeuronSet w) const { return (bits_[w >> 6] >> (w & 63)) & 1U; }

 private:
  std::vector<std::uint64_t> bits_;
};

/// Visits every interval [sigma, tau] contained in the code over `placed` with rank <= kmax.
/// visit returns false to stop.
void for_each_interval(const Words& words, const WordBitmap& members, NeuronSet placed, int kmax,
                       const std::function<bool(NeuronSet, NeuronSet)>& visit) {
  bool stop = false;
  std::function<void(NeuronSet, NeuronSet, int, int)> grow = [&](NeuronSet sigma, NeuronSet tau, int min_bit,
                                                                 int rank) {
    if (stop) return;
    if (!visit(sigma, tau)) {
      stop = true;
      return;
    }
    if (rank == kmax) return;
    const NeuronSet free = tau & ~sigma;
    for (int e = min_bit; e < 32 && !stop; ++e) {
      const NeuronSet bit = neuron_bit(e);
      if (!(placed & bit) || (tau & bit)) continue;
      bool inside = true;
      NeuronSet sub = 0;
      do {
        if (!members.contains(sigma | sub | bit)) {
          inside = false;
          break;
        }
        sub = (sub - free) & free;
      } while (sub != 0);
      if (inside) grow(sigma, tau | bit, e + 1, rank + 1);
    }
  };
  for (NeuronSet sigma : words) {
    if (stop) break;
    grow(sigma, sigma, 0, 0);
  }
}

Words pierce_words(const Words& words, const PiercingStep& step) {
  Words out = words;
  for (NeuronSet g : enumerate_interval(step.sigma, step.tau)) out.push_back(g | neuron_bit(step.neuron));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<PiercingStep> detect_piercing(const NeuralCode& code, int i) {
  if (i < 0 || i >= code.n()) throw InputError("neuron " + std::to_string(i + 1) + " out of range");
  if (!(code.support() & neuron_bit(i))) {
    throw InputError("neuron " + std::to_string(i + 1) + " is silent in the code");
  }
  return detect_in_words(code.words(), i);
}

std::optional<PiercingOrder> is_inductively_pierced(const NeuralCode& code) {
  require_clean(code);
  OrderSearch search;
  std::vector<PiercingStep> removal;
  if (!search.find_one(code.words(), first_neurons(code.n()), removal)) return std::nullopt;
  return PiercingOrder{{removal.rbegin(), removal.rend()}};
}

std::vector<PiercingOrder> all_piercing_orders(const NeuralCode& code) {
  if (code.n() > 10) throw InputError("enumerating all piercing orders is limited to 10 neurons");
  require_clean(code);
  OrderSearch search;
  std::vector<PiercingStep> removal;
  std::vector<PiercingOrder> out;
  search.find_all(code.words(), first_neurons(code.n()), removal, out);
  return out;
}

FastPiercedVerdict is_inductively_pierced_fast(const NeuralCode& code) {
  require_clean(code);
  FastPiercedVerdict verdict;
  verdict.cf = canonical_form(code);
  for (const auto& f : verdict.cf.elements) {
    if (f.degree() != 2) {
      verdict.non_quadratic = f;
      return verdict;
    }
  }
  verdict.graph = relationship_graph(polarized_ideal(verdict.cf, code.n()));
  verdict.chordality = chordality(*verdict.graph);
  verdict.pierced = verdict.chordality->chordal();
  return verdict;
}

PiercingProfile piercing_profile(const PiercingOrder& order) {
  const int n = static_cast<int>(order.steps.size());
  PiercingProfile profile(n);
  for (const auto& step : order.steps) {
    const int k = step.k();
    const int l = step.ell();
    if (k < 0 || k + l > n - 1) {
      throw InputError("step " + render_step(step) + " is impossible in a code on " + std::to_string(n) + " neurons");
    }
    ++profile.jkl[static_cast<std::size_t>(k) * n + l];
    ++profile.jk[k];
  }
  return profile;
}

NeuralCode build_code(std::span<const PiercingStep> steps, int n) {
  int max_neuron = -1;
  for (const auto& s : steps) max_neuron = std::max(max_neuron, s.neuron);
  if (n < 0) n = max_neuron + 1;
  if (max_neuron >= n) throw InputError("piercing step uses a neuron above n");
  Words words{0};
  NeuronSet placed = 0;
  for (const auto& step : steps) {
    if (step.neuron < 0 || (placed & neuron_bit(step.neuron))) {
      throw InputError("piercing step reuses neuron " + std::to_string(step.neuron + 1));
    }
    if (!is_subset(step.sigma, step.tau) || !is_subset(step.tau, placed)) {
      throw InputError("piercing step " + render_step(step) + " has an invalid interval");
    }
    for (NeuronSet g : enumerate_interval(step.sigma, step.tau)) {
      if (!std::binary_search(words.begin(), words.end(), g)) {
        throw InputError("piercing step " + render_step(step) + ": codeword " + format_set(g) +
                         " of the interval is missing from the code");
      }
    }
    words = pierce_words(words, step);
    placed |= neuron_bit(step.neuron);
  }
  return NeuralCode(n, std::move(words));
}

SquarefreeIdeal ideal_from_steps(std::span<const PiercingStep> steps, int n) {
  int max_neuron = -1;
  for (const auto& s : steps) max_neuron = std::max(max_neuron, s.neuron);
  if (n < 0) n = max_neuron + 1;
  SquarefreeIdeal ideal(n, {});
  NeuronSet placed = 0;
  for (const auto& step : steps) {
    ideal = extend_ideal(ideal, step, placed);
    placed |= neuron_bit(step.neuron);
  }
  return SquarefreeIdeal(n, ideal.gens());
}

GeneratedCode random_pierced_code(int n, int kmax, std::uint64_t seed) {
  if (n < 0 || n > kMaxNeurons) throw InputError("random code size must lie in 0.." + std::to_string(kMaxNeurons));
  if (kmax < 0) throw InputError("kmax must be nonnegative");
  std::mt19937_64 rng(seed);
  GeneratedCode out;
  Words words{0};
  for (int m = 0; m < n; ++m) {
    const NeuronSet placed = first_neurons(m);
    WordBitmap members(m);
    for (NeuronSet w : words) members.insert(w);
    std::uint64_t count = 0;
    for_each_interval(words, members, placed, kmax, [&count](NeuronSet, NeuronSet) {
      ++count;
      return true;
    });
    const std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, count - 1)(rng);
    std::uint64_t seen = 0;
    PiercingStep step{m, 0, 0};
    for_each_interval(words, members, placed, kmax, [&](NeuronSet sigma, NeuronSet tau) {
      if (seen++ == pick) {
        step.sigma = sigma;
        step.tau = tau;
        return false;
      }
      return true;
    });
    words = pierce_words(words, step);
    out.order.steps.push_back(step);
  }
  out.code = NeuralCode(n, std::move(words));
  return out;
}

std::vector<GeneratedCode> enumerate_pierced_codes(int n, int kmax) {
  if (n < 0 || n > 8) throw InputError("exhaustive piercing enumeration is limited to 8 neurons");
  std::map<Words, std::vector<PiercingStep>> level{{Words{0}, {}}};
  for (int m = 0; m < n; ++m) {
    std::map<Words, std::vector<PiercingStep>> next;
    const NeuronSet placed = first_neurons(m);
    for (const auto& [words, steps] : level) {
      WordBitmap members(m);
      for (NeuronSet w : words) members.insert(w);
      for_each_interval(words, members, placed, kmax, [&](NeuronSet sigma, NeuronSet tau) {
        const PiercingStep step{m, sigma, tau};
        Words grown = pierce_words(words, step);
        if (!next.contains(grown)) {
          auto seq = steps;
          seq.push_back(step);
          next.emplace(std::move(grown), std::move(seq));
        }
        return true;
      });
    }
    level = std::move(next);
  }
  std::vector<GeneratedCode> out;
  out.reserve(level.size());
  for (auto& [words, steps] : level) {
    out.push_back({PiercingOrder{steps}, NeuralCode(n, words)});
  }
  return out;
}

std::string render_step(const PiercingStep& step) {
  return "step " + std::to_string(step.neuron + 1) + ": sigma=" + format_set(step.sigma) +
         " tau=" + format_set(step.tau) + " k=" + std::to_string(step.k()) + " l=" + std::to_string(step.ell());
}

std::string render_order(const PiercingOrder& order) {
  std::string out;
  for (const auto& s : order.steps) out += render_step(s) + "\n";
  return out;
}

namespace {

NeuronSet parse_set(const std::string& body, int line_no) {
  NeuronSet s = 0;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(item, &used);
      if (used != item.size()) idx = 0;
    } catch (const std::exception&) {
      idx = 0;
    }
    if (idx <= 0 || idx > kMaxNeurons) {
      throw InputError("line " + std::to_string(line_no) + ": bad neuron '" + item + "'");
    }
    s |= neuron_bit(idx - 1);
  }
  return s;
}

}  // namespace

PiercingOrder parse_steps(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*step\s+(\d+)\s*:\s*sigma=\{([0-9,\s]*)\}\s+tau=\{([0-9,\s]*)\}(?:\s+k=(\d+))?(?:\s+l=(\d+))?\s*$)");
  PiercingOrder order;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, pattern)) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'step i: sigma={..} tau={..}'");
    }
    std::string sigma_body = m[2].str();
    std::string tau_body = m[3].str();
    std::erase_if(sigma_body, [](char c) { return c == ' ' || c == '\t'; });
    std::erase_if(tau_body, [](char c) { return c == ' ' || c == '\t'; });
    const int neuron = std::stoi(m[1].str());
    if (neuron <= 0 || neuron > kMaxNeurons) throw InputError("line " + std::to_string(line_no) + ": bad neuron");
    PiercingStep step{neuron - 1, parse_set(sigma_body, line_no), parse_set(tau_body, line_no)};
    if (m[4].matched && std::stoi(m[4].str()) != step.k()) {
      throw InputError("line " + std::to_string(line_no) + ": k does not match the interval rank");
    }
    if (m[5].matched && std::stoi(m[5].str()) != step.ell()) {
      throw InputError("line " + std::to_string(line_no) + ": l does not match |sigma|");
    }
    order.steps.push_back(step);
  }
  return order;
}

}  // namespace neurobetti
