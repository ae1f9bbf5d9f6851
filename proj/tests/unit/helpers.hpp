#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "neurobetti/code.hpp"

namespace testing_helpers {

/// Builds a set from 1-based labels.
inline neurobetti::NeuronSet S(std::initializer_list<int> labels) {
  neurobetti::NeuronSet s = 0;
  for (int i : labels) s |= neurobetti::neuron_bit(i - 1);
  return s;
}

/// Words written as digit strings, "" for the empty word: W(5, {"", "1", "12"}).
inline neurobetti::NeuralCode W(int n, std::initializer_list<std::string> words) {
  std::vector<neurobetti::NeuronSet> masks;
  for (const auto& w : words) {
    neurobetti::NeuronSet m = 0;
    for (char c : w) m |= neurobetti::neuron_bit(c - '1');
    masks.push_back(m);
  }
  return neurobetti::NeuralCode(n, masks);
}

inline neurobetti::NeuralCode key_code() {
  return W(5, {"", "1", "2", "3", "4", "12", "14", "23", "24", "35", "124", "235"});
}

}  // namespace testing_helpers
