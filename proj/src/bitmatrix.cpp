#include "neurobetti/bitmatrix.hpp"

#include <algorithm>

namespace neurobetti {

void BitMatrix::reset(std::size_t rows, std::size_t cols) {
  rows_ = rows;
  cols_ = cols;
  stride_ = (cols + 63) / 64;
  data_.assign(rows_ * stride_, 0);
}

std::size_t BitMatrix::eliminate() {
  std::size_t rank = 0;
  for (std::size_t word = 0; word < stride_ && rank < rows_; ++word) {
    for (unsigned bit = 0; bit < 64 && rank < rows_; ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t pivot = rank;
      while (pivot < rows_ && !(data_[pivot * stride_ + word] & mask)) ++pivot;
      if (pivot == rows_) continue;
      std::uint64_t* const prow = &data_[pivot * stride_];
      if (pivot != rank) std::swap_ranges(prow + word, prow + stride_, &data_[rank * stride_ + word]);
      const std::uint64_t* const top = &data_[rank * stride_];
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        std::uint64_t* const row = &data_[r * stride_];
        if (row[word] & mask) {
          for (std::size_t k = word; k < stride_; ++k) row[k] ^= top[k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace neurobetti
