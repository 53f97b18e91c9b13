#include "palsum/rational.hpp"

#include <stdexcept>

namespace palsum {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

BigRational::BigRational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  return BigRational(std::move(q));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return BigRational(num, den);
}

void RationalAccumulator::add(mpq_class term) {
  std::size_t level = 0;
  for (;; ++level) {
    if (level == levels_.size()) {
      levels_.push_back(std::move(term));
      occupied_.push_back(true);
      return;
    }
    if (!occupied_[level]) {
      levels_[level] = std::move(term);
      occupied_[level] = true;
      return;
    }
    term += levels_[level];
    occupied_[level] = false;
  }
}

void RationalAccumulator::add_unit_fraction(unsigned long n) {
  mpq_class t(1, n);
  add(std::move(t));
}

BigRational RationalAccumulator::total() const {
  mpq_class sum = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (occupied_[i]) sum += levels_[i];
  return BigRational(std::move(sum));
}

}  // namespace palsum
