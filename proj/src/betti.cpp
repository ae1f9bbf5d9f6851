#include "neurobetti/betti.hpp"

#include <algorithm>
#include <stdexcept>

#include "neurobetti/errors.hpp"

namespace neurobetti {

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // result * (a - b + i) / i stays integral at every step.
    __int128 wide = static_cast<__int128>(result) * (a - b + i);
    wide /= i;
    if (wide > INT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
    result = static_cast<std::int64_t>(wide);
  }
  return result;
}

std::uint64_t BettiTable::at(int w, int u, int v) const {
  const auto it = entries_.find({w, u, v});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int w, int u, int v, std::uint64_t count) {
  if (count == 0) return;
  entries_[{w, u, v}] += count;
}

GradedBetti BettiTable::graded() const {
  GradedBetti out;
  for (const auto& [idx, count] : entries_) out[{idx[0], idx[1] + idx[2]}] += count;
  return out;
}

std::vector<std::uint64_t> BettiTable::total() const {
  std::vector<std::uint64_t> out(max_degree() + 1, 0);
  for (const auto& [idx, count] : entries_) out[idx[0]] += count;
  return out;
}

int BettiTable::max_degree() const {
  int w = 0;
  for (const auto& [idx, count] : entries_) w = std::max(w, idx[0]);
  return w;
}

BettiTable base_table(int n) {
  BettiTable t(n);
  t.add(0, 0, 0, 1);
  return t;
}

BettiTable multigraded_betti_closed(const PiercingProfile& profile) {
  const int n = profile.n;
  BettiTable table = base_table(n);
  for (int w = 1; w <= std::max(0, n - 1); ++w) {
    for (int v = 0; v <= w; ++v) {
      std::int64_t sum = 0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          // The correction -1 at l == 0 applies to every k, including k with no k-piercings.
          const std::int64_t coeff = profile.at(k, l) - (l == 0 ? 1 : 0);
          if (coeff == 0) continue;
          sum += coeff * binom(n - 1 - k - l, w - v) * binom(l, v);
        }
      }
      if (sum < 0) {
        throw InputError("closed-form Betti number at (w=" + std::to_string(w) + ", u=" + std::to_string(w + 1 - v) +
                         ", v=" + std::to_string(v) + ") is negative; the profile is not from a pierced code");
      }
      table.add(w, w + 1 - v, v, static_cast<std::uint64_t>(sum));
    }
  }
  return table;
}

GradedBetti graded_betti_closed(const PiercingProfile& profile) {
  const int n = profile.n;
  GradedBetti out{{{0, 0}, 1}};
  for (int w = 1; w <= std::max(0, n - 1); ++w) {
    std::int64_t sum = 0;
    for (int k = 0; k < n; ++k) sum += (profile.marginal(k) - 1) * binom(n - 1 - k, w);
    if (sum < 0) {
      throw InputError("closed-form graded Betti number at w=" + std::to_string(w) + " is negative");
    }
    if (sum > 0) out[{w, w + 1}] = static_cast<std::uint64_t>(sum);
  }
  return out;
}

BettiTable betti_recursive(const PiercingOrder& order) {
  const int total = static_cast<int>(order.steps.size());
  BettiTable table = base_table(0);
  for (int m = 1; m <= total; ++m) {
    const auto& step = order.steps[m - 1];
    const int k = step.k();
    const int l = step.ell();
    if (k < 0 || k + l > m - 1) {
      throw InputError("step " + render_step(step) + " cannot be the piercing number " + std::to_string(m));
    }
    const int disjoint = m - 1 - k - l;
    BettiTable next = base_table(m);
    for (int w = 1; w <= m; ++w) {
      for (int u = 1; u <= w + 1; ++u) {
        const int v = w + 1 - u;
        std::uint64_t value = static_cast<std::uint64_t>(binom(disjoint, u - 1) * binom(l, v));
        value += table.at(w, u, v);
        if (w > 1) value += table.at(w - 1, u - 1, v);
        next.add(w, u, v, value);
      }
    }
    table = std::move(next);
  }
  return table;
}

namespace {

std::int64_t sign(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<std::int64_t> invert_graded(const GradedBetti& graded, int n) {
  if (n <= 0) throw InputError("inversion needs n >= 1");
  auto beta = [&graded](int w) -> std::int64_t {
    const auto it = graded.find({w, w + 1});
    return it == graded.end() ? 0 : static_cast<std::int64_t>(it->second);
  };
  for (const auto& [idx, count] : graded) {
    if (count == 0) continue;
    const auto [w, j] = idx;
    const bool base = (w == 0 && j == 0 && count == 1);
    const bool linear = (w >= 1 && j == w + 1 && w <= n - 1);
    if (!base && !linear) {
      throw InputError("graded entry (" + std::to_string(w) + "," + std::to_string(j) +
                       ") is off the linear strand of a pierced code on " + std::to_string(n) + " neurons");
    }
  }
  std::vector<std::int64_t> jk(n, 0);
  std::int64_t sum = 0;
  for (int k = 0; k < n; ++k) {
    std::int64_t value = 1;
    for (int w = n - 1 - k; w <= n - 1; ++w) {
      value += binom(w, n - 1 - k) * sign(w - n + 1 + k) * beta(w);
    }
    if (value < 0) throw InputError("inverted j_" + std::to_string(k) + " is negative; input is not from a pierced code");
    jk[k] = value;
    sum += value;
  }
  if (sum != n) {
    throw InputError("inverted piercing counts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
  }
  return jk;
}

PiercingProfile invert_multigraded(const BettiTable& table) {
  const int n = table.n();
  if (n <= 0) throw InputError("inversion needs n >= 1");
  for (const auto& [idx, count] : table.entries()) {
    const auto [w, u, v] = idx;
    const bool base = (w == 0 && u == 0 && v == 0 && count == 1);
    const bool linear = (w >= 1 && u + v == w + 1 && u >= 1 && w <= n - 1);
    if (!base && !linear) {
      throw InputError("multigraded entry (" + std::to_string(w) + "," + std::to_string(u) + "," + std::to_string(v) +
                       ") cannot occur for a pierced code on " + std::to_string(n) + " neurons");
    }
  }
  PiercingProfile profile(n);
  std::int64_t total = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::int64_t value = b == 0 ? 1 : 0;
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          const auto beta = static_cast<std::int64_t>(table.at(w, w + 1 - v, v));
          if (beta == 0) continue;
          value += beta * binom(w - v, n - 1 - a - b) * binom(v, b) * sign(w - n + 1 + a);
        }
      }
      if (value < 0 || (value > 0 && a + b > n - 1)) {
        throw InputError("inverted j_{" + std::to_string(a) + "," + std::to_string(b) +
                         "} is impossible; input is not from a pierced code");
      }
      profile.jkl[static_cast<std::size_t>(a) * n + b] = value;
      profile.jk[a] += value;
      total += value;
    }
  }
  if (total != n) {
    throw InputError("inverted piercing counts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  return profile;
}

int pdim_from_profile(const PiercingProfile& profile) {
  for (int t = 0; t < profile.n; ++t) {
    if (profile.marginal(t) > 1) return profile.n - 1 - t;
  }
  return 0;
}

}  // namespace neurobetti
