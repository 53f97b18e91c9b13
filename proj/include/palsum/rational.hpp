#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace palsum {

/// Exact rational in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const mpz_class& v) : q_(v) {}
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class q);

  /// Parses "p/q" or "p".
  static BigRational parse(const std::string& text);
  static BigRational unit_fraction(const mpz_class& n) { return BigRational(mpz_class(1), n); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const noexcept { return q_; }

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned exponent);

/// Pairwise (binary-counter) accumulator for long sums of rationals.
/// Keeps operand sizes balanced, which matters once denominators grow
/// into thousands of digits.
class RationalAccumulator {
 public:
  void add(mpq_class term);
  void add_unit_fraction(unsigned long n);
  BigRational total() const;

 private:
  std::vector<mpq_class> levels_;
  std::vector<bool> occupied_;
};

}  // namespace palsum
