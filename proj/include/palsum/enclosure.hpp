#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "palsum/rational.hpp"

namespace palsum {

inline constexpr unsigned kDefaultPrecisionBits = 128;

enum class Sign { negative, zero, positive, indeterminate };

const char* to_string(Sign s) noexcept;

/// Requested decimal digits exceed what the working precision can back.
class PrecisionUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] of MPFR floats. Every operation rounds lo toward
/// -inf and hi toward +inf, so the true real value stays inside.
class Enclosure {
 public:
  explicit Enclosure(unsigned precision_bits = kDefaultPrecisionBits);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure from_integer(const mpz_class& v, unsigned precision_bits);
  static Enclosure from_rational(const BigRational& q, unsigned precision_bits);
  /// [lo * 2^exp2, hi * 2^exp2]
  static Enclosure from_scaled(const mpz_class& lo, const mpz_class& hi, long exp2,
                               unsigned precision_bits);
  /// A decimal literal known to be truncated after its last digit: the
  /// true value lies in [literal, literal + 10^-(fraction digits)].
  static Enclosure from_truncated_decimal(std::string_view literal, unsigned precision_bits);
  static Enclosure from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  unsigned precision_bits() const noexcept { return static_cast<unsigned>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  /// Upper bound on hi - lo.
  double width() const;

  Sign sign() const noexcept;
  bool contains(const BigRational& q) const;
  bool contains(const Enclosure& inner) const;

  /// lo rounded down / hi rounded up to a fixed number of decimals.
  std::string lower_decimal(int digits) const;
  std::string upper_decimal(int digits) const;
  /// Midpoint rounded to nearest; for point estimates, not bounds.
  std::string nearest_decimal(int digits) const;
  std::string str(int digits = 20) const;

  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
  friend Enclosure operator-(const Enclosure& a);

 private:
  void widen_to(unsigned precision_bits);

  mpfr_t lo_;
  mpfr_t hi_;
};

Enclosure square(const Enclosure& x);
Enclosure abs(const Enclosure& x);
Enclosure sqrt(const Enclosure& x);
Enclosure log(const Enclosure& x);
/// ln Gamma(x) at a positive integer, i.e. ln((x-1)!).
Enclosure lngamma_point(const mpz_class& x, unsigned precision_bits);

/// a.hi < b.lo
bool certainly_less(const Enclosure& a, const Enclosure& b);

/// Euler's constant from a 60-digit literal, widened by the truncation error.
Enclosure euler_gamma(unsigned precision_bits);

}  // namespace palsum
