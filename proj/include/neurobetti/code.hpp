#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace neurobetti {

/// A set of neurons. Bit i stands for neuron i+1 in the external 1-based notation.
using NeuronSet = std::uint32_t;

inline constexpr int kMaxNeurons = 16;

inline int set_size(NeuronSet s) { return std::popcount(s); }
inline bool is_subset(NeuronSet a, NeuronSet b) { return (a & ~b) == 0; }
inline NeuronSet neuron_bit(int i) { return NeuronSet{1} << i; }
inline NeuronSet first_neurons(int n) { return n >= 32 ? ~NeuronSet{0} : (NeuronSet{1} << n) - 1; }

/// Lexicographic order on the sorted 1-based index lists of two sets ({1,3} < {1,5} < {3} < {4,5} < {5}).
bool index_lex_less(NeuronSet a, NeuronSet b);

/// "{1,3}" style rendering, 1-based.
std::string format_set(NeuronSet s);

/// A collection of codewords on n neurons. The empty codeword is always a member.
class NeuralCode {
 public:
  NeuralCode() = default;
  NeuralCode(int n, std::vector<NeuronSet> words);

  int n() const { return n_; }
  /// Sorted ascending by mask value, without duplicates.
  const std::vector<NeuronSet>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(NeuronSet w) const;
  /// Union of all codewords.
  NeuronSet support() const;
  /// True if construction had to add the missing empty codeword.
  bool empty_word_inserted() const { return inserted_empty_; }

  friend bool operator==(const NeuralCode& a, const NeuralCode& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_ = 0;
  std::vector<NeuronSet> words_{0};
  bool inserted_empty_ = false;
};

struct CodeDiagnostics {
  NeuronSet silent = 0;
  /// 0-based pairs (i, j), i < j, of neurons that fire identically in every codeword.
  std::vector<std::pair<int, int>> duplicates;

  bool clean() const { return silent == 0 && duplicates.empty(); }
};

/// Removes neuron i (0-based) from every codeword. With reindex the higher neurons shift down and
/// the result has n-1 neurons; otherwise i stays as a silent neuron.
NeuralCode delete_neuron(const NeuralCode& code, int i, bool reindex = true);

/// All gamma with sigma ⊆ gamma ⊆ tau, in ascending mask order.
std::vector<NeuronSet> enumerate_interval(NeuronSet sigma, NeuronSet tau);

CodeDiagnostics validate_code(const NeuralCode& code);

/// Deletes every silent neuron (with reindexing). Returns the stripped code.
NeuralCode strip_silent(const NeuralCode& code);

/// Code file text: optional "n=<int>" header, "#" comments, "0" for the empty word.
/// Indices above max_n (or above the declared n) are rejected.
NeuralCode parse_code(const std::string& text, int max_n = kMaxNeurons);
/// Inverse of parse_code; words ordered by size, then lexicographically.
std::string serialize_code(const NeuralCode& code);

}  // namespace neurobetti
