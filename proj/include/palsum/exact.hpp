#pragma once

#include <cstdint>
#include <stdexcept>

#include "palsum/digits.hpp"
#include "palsum/rational.hpp"

namespace palsum {

inline constexpr std::uint64_t kDefaultTermBudget = 20'000'000;

/// Raised when an exact sum would visit more terms than allowed.
class TermBudgetExceeded : public std::runtime_error {
 public:
  TermBudgetExceeded(const mpz_class& required, std::uint64_t budget);

  const mpz_class& required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  mpz_class required_;
  std::uint64_t budget_;
};

struct ExactOptions {
  std::uint64_t term_budget = kDefaultTermBudget;
  /// Worker threads for the per-leading-digit reduction; 0 picks the
  /// hardware concurrency. The result does not depend on this value.
  unsigned threads = 1;
};

/// x_b = 1 + 1/2 + ... + 1/(b-1)
BigRational harmonic_x(Base b);
/// y_b = 1/2 + ... + 1/b
BigRational harmonic_y(Base b);

/// Exact reciprocal sum of the k-digit palindromes of one base.
struct LayerSumRecord {
  Base base;
  unsigned k;
  BigRational value;
  mpz_class term_count;
};

LayerSumRecord layer_sum_exact(Base b, unsigned k, const ExactOptions& opts = {});

/// Sum of layers 1..max_k. The budget applies to the total term count.
BigRational partial_sum_exact(Base b, unsigned max_k, const ExactOptions& opts = {});

}  // namespace palsum
