#include "palsum/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace palsum {

namespace {

mpz_class pow_mpz(std::uint64_t b, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

std::uint64_t to_u64(const mpz_class& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

void require_length(unsigned k) {
  if (k < 1) throw std::invalid_argument("digit length k must be >= 1");
}

}  // namespace

Base::Base(std::uint64_t value) : value_(value) {
  if (value < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(value));
}

DigitString::DigitString(Base base, std::vector<std::uint64_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("digit string must be non-empty");
  if (digits_.front() == 0) throw std::invalid_argument("leading digit must be nonzero");
  for (auto d : digits_)
    if (d >= base_.value()) throw std::invalid_argument("digit out of range for base");
}

mpz_class DigitString::value() const {
  mpz_class n = 0;
  const mpz_class b = to_mpz(base_.value());
  for (auto d : digits_) n = n * b + to_mpz(d);
  return n;
}

bool DigitString::is_symmetric() const noexcept {
  return std::equal(digits_.begin(), digits_.begin() + digits_.size() / 2, digits_.rbegin());
}

std::string DigitString::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out + "]_" + std::to_string(base_.value());
}

DigitString to_digits(const mpz_class& n, Base b) {
  if (n < 1) throw std::invalid_argument("to_digits requires n >= 1");
  std::vector<std::uint64_t> digits;
  const mpz_class radix = to_mpz(b.value());
  mpz_class q = n, r;
  while (q != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), radix.get_mpz_t());
    digits.push_back(to_u64(r));
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(b, std::move(digits));
}

bool is_palindrome(const mpz_class& n, Base b) { return to_digits(n, b).is_symmetric(); }

mpz_class count_palindromes(Base b, unsigned k) {
  require_length(k);
  return to_mpz(b.value() - 1) * pow_mpz(b.value(), (k + 1) / 2 - 1);
}

PalindromeStream::PalindromeStream(Base b, unsigned k)
    : base_(b), length_(k), size_(count_palindromes(b, k)) {
  const unsigned f = (k + 1) / 2;
  half_.assign(f, 0);
  half_[0] = 1;
  weights_.resize(f);
  for (unsigned j = 0; j < f; ++j) {
    const unsigned mirror = k - 1 - j;
    weights_[j] = pow_mpz(b.value(), mirror);
    if (mirror != j) weights_[j] += pow_mpz(b.value(), j);
  }
}

mpz_class PalindromeStream::assemble() const {
  mpz_class n = 0;
  for (std::size_t j = 0; j < half_.size(); ++j) n += weights_[j] * to_mpz(half_[j]);
  return n;
}

std::optional<mpz_class> PalindromeStream::next() {
  if (done_) return std::nullopt;
  mpz_class current = assemble();
  // Odometer step; the leading digit wraps past b-1 only at the very end.
  std::size_t j = half_.size();
  while (j-- > 0) {
    if (++half_[j] < base_.value()) break;
    if (j == 0) {
      done_ = true;
      break;
    }
    half_[j] = 0;
  }
  return current;
}

PalindromeStream enumerate_palindromes(Base b, unsigned k) { return PalindromeStream(b, k); }

mpz_class unrank_palindrome(Base b, unsigned k, const mpz_class& index) {
  const mpz_class count = count_palindromes(b, k);
  if (index < 0 || index >= count)
    throw std::out_of_range("palindrome index " + index.get_str() + " outside [0, " +
                            count.get_str() + ")");
  const unsigned f = (k + 1) / 2;
  const mpz_class radix = to_mpz(b.value());
  // index = (a-1) * b^(f-1) + (remaining half digits read in base b)
  std::vector<std::uint64_t> half(f, 0);
  mpz_class q = index, r;
  for (unsigned j = f; j-- > 1;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), radix.get_mpz_t());
    half[j] = to_u64(r);
  }
  half[0] = to_u64(q) + 1;

  std::vector<std::uint64_t> digits(half);
  for (unsigned j = k / 2; j-- > 0;) digits.push_back(half[j]);
  return DigitString(b, std::move(digits)).value();
}

mpz_class rank_palindrome(const mpz_class& n, Base b) {
  const DigitString ds = to_digits(n, b);
  if (!ds.is_symmetric())
    throw std::invalid_argument(n.get_str() + " is not a palindrome in base " +
                                std::to_string(b.value()));
  const auto d = ds.digits();
  const std::size_t f = (d.size() + 1) / 2;
  const mpz_class radix = to_mpz(b.value());
  mpz_class idx = to_mpz(d[0] - 1);
  for (std::size_t j = 1; j < f; ++j) idx = idx * radix + to_mpz(d[j]);
  return idx;
}

}  // namespace palsum
