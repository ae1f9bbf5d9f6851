#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace neurobetti {

/// Dense matrix over F2 with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) { reset(rows, cols); }

  /// Resizes to rows x cols and clears; keeps the allocation when possible.
  void reset(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); }
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }
  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U; }

  /// Rank over F2 by in-place row reduction. Destroys the contents.
  std::size_t eliminate();

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace neurobetti
