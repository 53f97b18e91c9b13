#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace palsum {

/// Radix of a positional expansion. Always at least 2.
class Base {
 public:
  explicit Base(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(const Base&, const Base&) = default;

 private:
  std::uint64_t value_;
};

/// Base-b expansion of a positive integer, most significant digit first.
/// The leading digit is never zero.
class DigitString {
 public:
  DigitString(Base base, std::vector<std::uint64_t> digits);

  Base base() const noexcept { return base_; }
  std::span<const std::uint64_t> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }

  /// Horner evaluation of the digits in the base.
  mpz_class value() const;
  bool is_symmetric() const noexcept;
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  Base base_;
  std::vector<std::uint64_t> digits_;
};

DigitString to_digits(const mpz_class& n, Base b);
bool is_palindrome(const mpz_class& n, Base b);

/// Number of k-digit palindromes in base b: (b-1) * b^ceil((k-2)/2).
mpz_class count_palindromes(Base b, unsigned k);

/// Ordered stream of the k-digit base-b palindromes.
///
/// Walks the free half (leading digit, then the next ceil(k/2)-1 digits) as
/// an odometer and mirrors it, so members come out strictly increasing and
/// no non-palindrome is ever visited.
class PalindromeStream {
 public:
  PalindromeStream(Base b, unsigned k);

  std::optional<mpz_class> next();
  const mpz_class& size() const noexcept { return size_; }

 private:
  mpz_class assemble() const;

  Base base_;
  unsigned length_;
  std::vector<std::uint64_t> half_;
  std::vector<mpz_class> weights_;
  mpz_class size_;
  bool done_ = false;
};

PalindromeStream enumerate_palindromes(Base b, unsigned k);

/// i-th member (0-based) of enumerate_palindromes(b, k).
mpz_class unrank_palindrome(Base b, unsigned k, const mpz_class& index);

/// Inverse of unrank_palindrome; n must be a palindrome in base b.
mpz_class rank_palindrome(const mpz_class& n, Base b);

}  // namespace palsum
