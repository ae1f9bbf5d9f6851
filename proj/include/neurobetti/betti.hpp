#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "neurobetti/piercing.hpp"

namespace neurobetti {

/// C(a, b) = a! / (b! (a-b)!) for 0 <= b <= a, and 0 otherwise (including negative a).
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::int64_t binom(std::int64_t a, std::int64_t b);

/// (homological degree w, x-degree u, y-degree v).
using BettiIndex = std::array<int, 3>;
/// (w, j) with j = u + v.
using GradedBetti = std::map<std::pair<int, int>, std::uint64_t>;

/// Multigraded Betti numbers of S/J over S = F2[x_1..x_n, y_1..y_n]. Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  int n() const { return n_; }
  std::uint64_t at(int w, int u, int v) const;
  void add(int w, int u, int v, std::uint64_t count);
  const std::map<BettiIndex, std::uint64_t>& entries() const { return entries_; }

  GradedBetti graded() const;
  std::vector<std::uint64_t> total() const;
  /// Largest w with a nonzero entry.
  int max_degree() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  std::map<BettiIndex, std::uint64_t> entries_;
};

/// The table of S/S: only (0,0,0) -> 1.
BettiTable base_table(int n);

/// beta_{w, w+1-v, v} = sum_{k,l} (j_{k,l} - [l == 0]) C(n-1-k-l, w-v) C(l, v) for w > 0.
/// Throws InputError if an entry comes out negative (the profile is not from a pierced code).
BettiTable multigraded_betti_closed(const PiercingProfile& profile);

/// beta_{w, w+1} = sum_k (j_k - 1) C(n-1-k, w) for w >= 1, plus beta_{0,0} = 1.
GradedBetti graded_betti_closed(const PiercingProfile& profile);

/// Folds the one-step multigraded recursion over the piercing order, starting from S/(0).
BettiTable betti_recursive(const PiercingOrder& order);

/// j_k = 1 + sum_{w=n-1-k}^{n-1} C(w, n-1-k) (-1)^{w-n+1+k} beta_{w,w+1}.
/// Throws InputError unless the result is a valid marginal profile (nonnegative, summing to n)
/// and the input is concentrated on the linear strand.
std::vector<std::int64_t> invert_graded(const GradedBetti& graded, int n);

/// j_{a,b} = [b == 0] + sum_{v,w} beta_{w,w+1-v,v} C(w-v, n-1-a-b) C(v, b) (-1)^{w-n+1+a}.
/// Throws InputError on results that cannot be a piercing profile.
PiercingProfile invert_multigraded(const BettiTable& table);

/// n - 1 - t for the least t with j_t > 1; 0 when there is none.
int pdim_from_profile(const PiercingProfile& profile);

}  // namespace neurobetti
