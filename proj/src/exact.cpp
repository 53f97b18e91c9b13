#include "palsum/exact.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "palindrome_walk.hpp"

namespace palsum {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void check_budget(const mpz_class& count, std::uint64_t budget) {
  if (count > mpz_class(std::to_string(budget))) throw TermBudgetExceeded(count, budget);
}

BigRational layer_sum_u64(std::uint64_t b, unsigned k, unsigned threads) {
  // One exact sub-total per leading digit, summed afterwards in digit order.
  std::vector<BigRational> per_digit(b - 1);
  std::atomic<std::uint64_t> next{1};
  auto worker = [&] {
    for (std::uint64_t a; (a = next.fetch_add(1)) < b;) {
      RationalAccumulator acc;
      detail::for_each_palindrome_u64(b, k, a, a,
                                      [&](std::uint64_t n) { acc.add_unit_fraction(n); });
      per_digit[a - 1] = acc.total();
    }
  };
  const unsigned n_threads = std::min<std::uint64_t>(resolve_threads(threads), b - 1);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  RationalAccumulator total;
  for (auto& v : per_digit) total.add(v.mpq());
  return total.total();
}

BigRational layer_sum_mpz(Base b, unsigned k) {
  RationalAccumulator acc;
  auto stream = enumerate_palindromes(b, k);
  while (auto n = stream.next()) acc.add(mpq_class(mpz_class(1), *n));
  return acc.total();
}

}  // namespace

TermBudgetExceeded::TermBudgetExceeded(const mpz_class& required, std::uint64_t budget)
    : std::runtime_error("term budget exceeded: " + required.get_str() +
                         " terms required, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

BigRational harmonic_x(Base b) {
  RationalAccumulator acc;
  for (std::uint64_t a = 1; a < b.value(); ++a) acc.add_unit_fraction(a);
  return acc.total();
}

BigRational harmonic_y(Base b) {
  RationalAccumulator acc;
  for (std::uint64_t a = 2; a <= b.value(); ++a) acc.add_unit_fraction(a);
  return acc.total();
}

LayerSumRecord layer_sum_exact(Base b, unsigned k, const ExactOptions& opts) {
  const mpz_class count = count_palindromes(b, k);
  check_budget(count, opts.term_budget);
  BigRational value;
  if (detail::fits_u64(b.value(), k)) {
    value = layer_sum_u64(b.value(), k, opts.threads);
  } else {
    value = layer_sum_mpz(b, k);
  }
  return LayerSumRecord{b, k, std::move(value), count};
}

BigRational partial_sum_exact(Base b, unsigned max_k, const ExactOptions& opts) {
  if (max_k < 1) throw std::invalid_argument("partial sum needs at least one layer");
  mpz_class total_terms = 0;
  for (unsigned k = 1; k <= max_k; ++k) total_terms += count_palindromes(b, k);
  check_budget(total_terms, opts.term_budget);
  BigRational sum;
  for (unsigned k = 1; k <= max_k; ++k) sum += layer_sum_exact(b, k, opts).value;
  return sum;
}

}  // namespace palsum
