#include "palsum/enclosure.hpp"

#include <algorithm>
#include <cmath>

namespace palsum {

namespace {

constexpr const char* kEulerGamma60 =
    "0.577215664901532860606512090082402431042159335939923598805767";

struct MpfrTemp {
  explicit MpfrTemp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~MpfrTemp() { mpfr_clear(v); }
  MpfrTemp(const MpfrTemp&) = delete;
  MpfrTemp& operator=(const MpfrTemp&) = delete;
  mpfr_t v;
};

void require_precision(unsigned bits) {
  if (bits < 16) throw std::invalid_argument("precision must be at least 16 bits");
}

enum class Round { down, up, nearest };

std::string format_fixed(mpfr_srcptr x, int digits, Round mode) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const double supported = std::floor(static_cast<double>(mpfr_get_prec(x)) * std::log10(2.0));
  if (digits > supported)
    throw PrecisionUnderflow(std::to_string(digits) + " decimals requested but " +
                             std::to_string(mpfr_get_prec(x)) + "-bit precision supports " +
                             std::to_string(static_cast<int>(supported)));
  char* raw = nullptr;
  const char* fmt = mode == Round::up ? "%.*RUf" : (mode == Round::down ? "%.*RDf" : "%.*RNf");
  const int n = mpfr_asprintf(&raw, fmt, digits, x);
  if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  // rounding a tiny negative up (or to nearest) prints "-0.000"
  if (out.size() > 1 && out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos)
    out.erase(0, 1);
  return out;
}

}  // namespace

const char* to_string(Sign s) noexcept {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    case Sign::indeterminate: return "indeterminate";
  }
  return "?";
}

Enclosure::Enclosure(unsigned precision_bits) {
  require_precision(precision_bits);
  mpfr_init2(lo_, precision_bits);
  mpfr_init2(hi_, precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::from_integer(const mpz_class& v, unsigned precision_bits) {
  Enclosure e(precision_bits);
  mpfr_set_z(e.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(e.hi_, v.get_mpz_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_rational(const BigRational& q, unsigned precision_bits) {
  Enclosure e(precision_bits);
  mpfr_set_q(e.lo_, q.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e.hi_, q.mpq().get_mpq_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_scaled(const mpz_class& lo, const mpz_class& hi, long exp2,
                                 unsigned precision_bits) {
  if (lo > hi) throw std::invalid_argument("from_scaled: lo > hi");
  Enclosure e(precision_bits);
  mpfr_set_z_2exp(e.lo_, lo.get_mpz_t(), exp2, MPFR_RNDD);
  mpfr_set_z_2exp(e.hi_, hi.get_mpz_t(), exp2, MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_truncated_decimal(std::string_view literal, unsigned precision_bits) {
  const std::string text(literal);
  const auto dot = text.find('.');
  const long frac_digits = dot == std::string::npos ? 0 : static_cast<long>(text.size() - dot - 1);
  Enclosure e(precision_bits);
  if (mpfr_set_str(e.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(e.hi_, text.c_str(), 10, MPFR_RNDU) != 0)
    throw std::invalid_argument("bad decimal literal: " + text);
  // hi += 10^-frac_digits, rounded up
  MpfrTemp ulp(precision_bits);
  mpfr_set_ui(ulp.v, 10, MPFR_RNDU);
  mpfr_pow_si(ulp.v, ulp.v, -frac_digits, MPFR_RNDU);
  if (text.front() == '-')
    mpfr_sub(e.lo_, e.lo_, ulp.v, MPFR_RNDD);
  else
    mpfr_add(e.hi_, e.hi_, ulp.v, MPFR_RNDU);
  return e;
}

Enclosure Enclosure::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi) {
  if (mpfr_greater_p(lo, hi) || mpfr_nan_p(lo) || mpfr_nan_p(hi))
    throw std::invalid_argument("from_endpoints: lo > hi");
  Enclosure e(static_cast<unsigned>(std::max(mpfr_get_prec(lo), mpfr_get_prec(hi))));
  mpfr_set(e.lo_, lo, MPFR_RNDD);
  mpfr_set(e.hi_, hi, MPFR_RNDU);
  return e;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  Enclosure e(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_min(e.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(e.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return e;
}

double Enclosure::mid_double() const {
  MpfrTemp m(mpfr_get_prec(lo_) + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Enclosure::width() const {
  MpfrTemp w(mpfr_get_prec(lo_));
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

Sign Enclosure::sign() const noexcept {
  if (mpfr_sgn(lo_) > 0) return Sign::positive;
  if (mpfr_sgn(hi_) < 0) return Sign::negative;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::zero;
  return Sign::indeterminate;
}

bool Enclosure::contains(const BigRational& q) const {
  return mpfr_cmp_q(lo_, q.mpq().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.mpq().get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

std::string Enclosure::lower_decimal(int digits) const { return format_fixed(lo_, digits, Round::down); }
std::string Enclosure::upper_decimal(int digits) const { return format_fixed(hi_, digits, Round::up); }

std::string Enclosure::nearest_decimal(int digits) const {
  MpfrTemp m(mpfr_get_prec(lo_) + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return format_fixed(m.v, digits, Round::nearest);
}

std::string Enclosure::str(int digits) const {
  return "[" + lower_decimal(digits) + ", " + upper_decimal(digits) + "]";
}

void Enclosure::widen_to(unsigned precision_bits) {
  if (precision_bits <= this->precision_bits()) return;
  mpfr_prec_round(lo_, precision_bits, MPFR_RNDD);
  mpfr_prec_round(hi_, precision_bits, MPFR_RNDU);
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  widen_to(o.precision_bits());
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  widen_to(o.precision_bits());
  // [a, b] - [c, d] = [a - d, b - c]; o may alias *this.
  const Enclosure rhs = o;
  mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  const mpfr_prec_t p = std::max(precision_bits(), o.precision_bits());
  MpfrTemp t(p), lo(p), hi(p);
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  mpfr_set_prec(lo_, p);
  mpfr_set_prec(hi_, p);
  mpfr_set(lo_, lo.v, MPFR_RNDD);
  mpfr_set(hi_, hi.v, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& o) {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw std::domain_error("division by an enclosure containing zero");
  const mpfr_prec_t p = std::max(precision_bits(), o.precision_bits());
  MpfrTemp t(p), lo(p), hi(p);
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  mpfr_set_prec(lo_, p);
  mpfr_set_prec(hi_, p);
  mpfr_set(lo_, lo.v, MPFR_RNDD);
  mpfr_set(hi_, hi.v, MPFR_RNDU);
  return *this;
}

Enclosure operator-(const Enclosure& a) {
  Enclosure r(a.precision_bits());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Enclosure square(const Enclosure& x) {
  if (x.sign() == Sign::positive || x.sign() == Sign::zero) return x * x;
  if (x.sign() == Sign::negative) return (-x) * (-x);
  // straddles zero: [0, max(lo^2, hi^2)]
  MpfrTemp lo(x.precision_bits()), hi(x.precision_bits()), t(x.precision_bits());
  mpfr_set_zero(lo.v, 1);
  mpfr_sqr(hi.v, x.lo(), MPFR_RNDU);
  mpfr_sqr(t.v, x.hi(), MPFR_RNDU);
  mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
  return Enclosure::from_endpoints(lo.v, hi.v);
}

Enclosure abs(const Enclosure& x) {
  switch (x.sign()) {
    case Sign::negative: return -x;
    case Sign::positive:
    case Sign::zero: return x;
    case Sign::indeterminate: break;
  }
  // [0, max(-lo, hi)]
  MpfrTemp lo(x.precision_bits()), hi(x.precision_bits());
  mpfr_set_zero(lo.v, 1);
  mpfr_neg(hi.v, x.lo(), MPFR_RNDU);
  mpfr_max(hi.v, hi.v, x.hi(), MPFR_RNDU);
  return Enclosure::from_endpoints(lo.v, hi.v);
}

Enclosure sqrt(const Enclosure& x) {
  if (mpfr_sgn(x.lo()) < 0) throw std::domain_error("sqrt of an enclosure reaching below zero");
  MpfrTemp lo(x.precision_bits()), hi(x.precision_bits());
  mpfr_sqrt(lo.v, x.lo(), MPFR_RNDD);
  mpfr_sqrt(hi.v, x.hi(), MPFR_RNDU);
  return Enclosure::from_endpoints(lo.v, hi.v);
}

Enclosure log(const Enclosure& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw std::domain_error("log of an enclosure reaching zero");
  MpfrTemp lo(x.precision_bits()), hi(x.precision_bits());
  mpfr_log(lo.v, x.lo(), MPFR_RNDD);
  mpfr_log(hi.v, x.hi(), MPFR_RNDU);
  return Enclosure::from_endpoints(lo.v, hi.v);
}

Enclosure lngamma_point(const mpz_class& x, unsigned precision_bits) {
  if (x < 1) throw std::domain_error("lngamma_point needs a positive integer");
  const mpfr_prec_t p = precision_bits;
  MpfrTemp arg(p + 64), lo(p), hi(p);
  if (mpfr_set_z(arg.v, x.get_mpz_t(), MPFR_RNDN) != 0)
    throw std::domain_error("lngamma_point argument not representable");
  mpfr_lngamma(lo.v, arg.v, MPFR_RNDD);
  mpfr_lngamma(hi.v, arg.v, MPFR_RNDU);
  return Enclosure::from_endpoints(lo.v, hi.v);
}

bool certainly_less(const Enclosure& a, const Enclosure& b) { return mpfr_less_p(a.hi(), b.lo()); }

Enclosure euler_gamma(unsigned precision_bits) {
  return Enclosure::from_truncated_decimal(kEulerGamma60, precision_bits);
}

}  // namespace palsum
