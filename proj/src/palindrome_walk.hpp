#pragma once

// Machine-word palindrome walk shared by the exact and enclosure layer sums.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace palsum::detail {

/// b^e, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) return std::nullopt;
    r *= b;
  }
  return r;
}

/// True when every k-digit base-b number fits in a uint64_t.
inline bool fits_u64(std::uint64_t b, unsigned k) { return checked_pow(b, k).has_value(); }

/// Positional weight of each free-half digit: a palindrome equals
/// sum(half[j] * weight[j]). Requires fits_u64(b, k).
inline std::vector<std::uint64_t> half_weights(std::uint64_t b, unsigned k) {
  const unsigned f = (k + 1) / 2;
  std::vector<std::uint64_t> w(f);
  for (unsigned j = 0; j < f; ++j) {
    const unsigned mirror = k - 1 - j;
    w[j] = *checked_pow(b, mirror);
    if (mirror != j) w[j] += *checked_pow(b, j);
  }
  return w;
}

/// Calls fn(n) for every k-digit base-b palindrome whose leading digit lies
/// in [a_first, a_last], in increasing order.
template <class Fn>
void for_each_palindrome_u64(std::uint64_t b, unsigned k, std::uint64_t a_first,
                             std::uint64_t a_last, Fn&& fn) {
  const auto w = half_weights(b, k);
  const unsigned f = static_cast<unsigned>(w.size());
  std::array<std::uint64_t, 40> mid{};  // f <= 32 whenever b^k fits in 64 bits
  for (std::uint64_t a = a_first; a <= a_last; ++a) {
    if (f == 1) {
      fn(a * w[0]);
      continue;
    }
    const std::uint64_t step = w[f - 1];
    std::uint64_t base = a * w[0];
    mid.fill(0);
    for (;;) {
      std::uint64_t n = base;
      for (std::uint64_t d = 0; d < b; ++d, n += step) fn(n);
      int j = static_cast<int>(f) - 2;
      for (; j >= 1; --j) {
        if (++mid[j] < b) {
          base += w[j];
          break;
        }
        base -= (b - 1) * w[j];
        mid[j] = 0;
      }
      if (j < 1) break;
    }
  }
}

}  // namespace palsum::detail
