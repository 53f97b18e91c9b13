#pragma once

// Test-only reference computations. Nothing here calls into palsum, so the
// checks stay independent of the code paths they validate.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Base-b digits of n by repeated division, least significant first.
inline std::vector<std::uint64_t> digits_lsf(std::uint64_t n, std::uint64_t b) {
  std::vector<std::uint64_t> d;
  for (; n > 0; n /= b) d.push_back(n % b);
  return d;
}

inline bool reversal_palindrome(std::uint64_t n, std::uint64_t b) {
  auto d = digits_lsf(n, b);
  auto r = d;
  std::reverse(r.begin(), r.end());
  return d == r;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Every k-digit base-b palindrome, found by filtering [b^(k-1), b^k).
inline std::vector<std::uint64_t> filtered_palindromes(std::uint64_t b, unsigned k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = ipow(b, k - 1); n < ipow(b, k); ++n)
    if (reversal_palindrome(n, b)) out.push_back(n);
  return out;
}

/// Plain left-to-right sum of 1/n.
inline mpq_class reciprocal_sum(const std::vector<std::uint64_t>& ns) {
  mpq_class s = 0;
  for (auto n : ns) s += mpq_class(1, static_cast<unsigned long>(n));
  return s;
}

inline mpq_class harmonic_range(std::uint64_t from, std::uint64_t to) {
  mpq_class s = 0;
  for (std::uint64_t a = from; a <= to; ++a) s += mpq_class(1, static_cast<unsigned long>(a));
  return s;
}

inline mpq_class qpow(std::uint64_t b, unsigned e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), b, e);
  return mpq_class(p);
}

/// Per-layer bounds used in the series-bound proof: y_b / b^floor(k/2) and
/// x_b b^ceil((k-2)/2) / (b^(k-1) + 1).
inline mpq_class layer_lower(std::uint64_t b, unsigned k) {
  return harmonic_range(2, b) / qpow(b, k / 2);
}
inline mpq_class layer_upper(std::uint64_t b, unsigned k) {
  return harmonic_range(1, b - 1) * qpow(b, (k - 1) / 2) / (qpow(b, k - 1) + 1);
}

/// sum_{k=first}^{last} 1 / b^floor(k/2), plus a bound on everything after
/// last: sum_{k>last} b^-floor(k/2) <= 2 b^-floor((last+1)/2) * b/(b-1).
struct TailPartial {
  mpq_class partial;
  mpq_class remainder_bound;
};

inline TailPartial geometric_tail_partial(std::uint64_t b, unsigned first, unsigned last) {
  TailPartial t{0, 0};
  for (unsigned k = first; k <= last; ++k) t.partial += 1 / qpow(b, k / 2);
  t.remainder_bound = mpq_class(2) / qpow(b, (last + 1) / 2) * mpq_class(b, b - 1);
  return t;
}

/// Exact value of a plain decimal literal such as "-0.0123".
inline mpq_class decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(text, 10));
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpq_class q(mpz_class(digits, 10), 1);
  q /= qpow(10, static_cast<unsigned>(text.size() - dot - 1));
  q.canonicalize();
  return q;
}

}  // namespace oracle
