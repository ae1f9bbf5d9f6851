#include "neurobetti/code.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "neurobetti/errors.hpp"

namespace neurobetti {

bool index_lex_less(NeuronSet a, NeuronSet b) {
  if (a == b) return false;
  const NeuronSet diff = a ^ b;
  const NeuronSet low = diff & (~diff + 1);
  // Both share every index below `low`. The one holding `low` is smaller unless the other has
  // nothing left, in which case the other is a proper prefix.
  const NeuronSet above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::string format_set(NeuronSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s & neuron_bit(i)) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

NeuralCode::NeuralCode(int n, std::vector<NeuronSet> words) : n_(n), words_(std::move(words)) {
  if (n < 0 || n > kMaxNeurons) {
    throw InputError("neuron count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxNeurons));
  }
  const NeuronSet allowed = first_neurons(n);
  for (NeuronSet w : words_) {
    if (!is_subset(w, allowed)) {
      throw InputError("codeword " + format_set(w) + " uses a neuron above n=" + std::to_string(n));
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty() || words_.front() != 0) {
    words_.insert(words_.begin(), 0);
    inserted_empty_ = true;
  }
}

bool NeuralCode::contains(NeuronSet w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

NeuronSet NeuralCode::support() const {
  NeuronSet s = 0;
  for (NeuronSet w : words_) s |= w;
  return s;
}

NeuralCode delete_neuron(const NeuralCode& code, int i, bool reindex) {
  if (i < 0 || i >= code.n()) {
    throw InputError("neuron " + std::to_string(i + 1) + " out of range 1.." + std::to_string(code.n()));
  }
  const NeuronSet low = neuron_bit(i) - 1;
  std::vector<NeuronSet> out;
  out.reserve(code.size());
  for (NeuronSet w : code.words()) {
    if (reindex) {
      out.push_back((w & low) | ((w >> 1) & ~low));
    } else {
      out.push_back(w & ~neuron_bit(i));
    }
  }
  return NeuralCode(reindex ? code.n() - 1 : code.n(), std::move(out));
}

std::vector<NeuronSet> enumerate_interval(NeuronSet sigma, NeuronSet tau) {
  if (!is_subset(sigma, tau)) {
    throw InputError("interval endpoints not nested: " + format_set(sigma) + " is not contained in " +
                     format_set(tau));
  }
  const NeuronSet free = tau & ~sigma;
  std::vector<NeuronSet> out;
  out.reserve(std::size_t{1} << set_size(free));
  // Ascending enumeration of the subsets of `free`.
  NeuronSet sub = 0;
  do {
    out.push_back(sigma | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

CodeDiagnostics validate_code(const NeuralCode& code) {
  CodeDiagnostics diag;
  diag.silent = first_neurons(code.n()) & ~code.support();
  for (int i = 0; i < code.n(); ++i) {
    for (int j = i + 1; j < code.n(); ++j) {
      const bool same = std::all_of(code.words().begin(), code.words().end(), [&](NeuronSet w) {
        return ((w >> i) & 1U) == ((w >> j) & 1U);
      });
      if (same) diag.duplicates.emplace_back(i, j);
    }
  }
  return diag;
}

NeuralCode strip_silent(const NeuralCode& code) {
  NeuralCode out = code;
  for (int i = code.n() - 1; i >= 0; --i) {
    if (!(code.support() & neuron_bit(i))) out = delete_neuron(out, i, true);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

NeuralCode parse_code(const std::string& text, int max_n) {
  max_n = std::min(max_n, kMaxNeurons);
  int declared = -1;
  int seen_max = 0;
  std::vector<NeuronSet> words;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      if (declared >= 0 || !words.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": header n=... must come first and only once");
      }
      declared = parse_int(trim(line.substr(2)), line_no);
      if (declared < 0 || declared > max_n) {
        throw InputError("line " + std::to_string(line_no) + ": n=" + std::to_string(declared) +
                         " exceeds the limit of " + std::to_string(max_n) + " neurons");
      }
      continue;
    }
    if (line == "0") {
      words.push_back(0);
      continue;
    }
    NeuronSet word = 0;
    std::istringstream tokens{std::string(line)};
    std::string token;
    while (tokens >> token) {
      const int idx = parse_int(token, line_no);
      if (idx <= 0) {
        throw InputError("line " + std::to_string(line_no) + ": neuron index must be positive, got " +
                         std::to_string(idx));
      }
      const int limit = declared >= 0 ? declared : max_n;
      if (idx > limit) {
        throw InputError("line " + std::to_string(line_no) + ": neuron index " + std::to_string(idx) +
                         " exceeds n=" + std::to_string(limit));
      }
      word |= neuron_bit(idx - 1);
      seen_max = std::max(seen_max, idx);
    }
    words.push_back(word);
  }
  return NeuralCode(declared >= 0 ? declared : seen_max, std::move(words));
}

std::string serialize_code(const NeuralCode& code) {
  std::vector<NeuronSet> words = code.words();
  std::sort(words.begin(), words.end(), [](NeuronSet a, NeuronSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return index_lex_less(a, b);
  });
  std::string out = "n=" + std::to_string(code.n()) + "\n";
  for (NeuronSet w : words) {
    if (w == 0) {
      out += "0\n";
      continue;
    }
    bool first = true;
    for (int i = 0; i < code.n(); ++i) {
      if (w & neuron_bit(i)) {
        if (!first) out += ' ';
        out += std::to_string(i + 1);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace neurobetti
