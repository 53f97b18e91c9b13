#pragma once

#include <cstdint>

#include "palsum/digits.hpp"
#include "palsum/enclosure.hpp"
#include "palsum/exact.hpp"

namespace palsum {

/// How layer sums s_{b,k} are turned into enclosures.
enum class LayerMode {
  /// Exact rational when the layer has at most exact_term_limit terms,
  /// directed-rounded accumulation otherwise.
  automatic,
  /// Always exact; fails with TermBudgetExceeded above term_budget.
  exact,
  /// Always directed-rounded accumulation.
  directed,
};

struct BoundsConfig {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t term_budget = kDefaultTermBudget;
  std::uint64_t exact_term_limit = 4096;
  LayerMode layer_mode = LayerMode::automatic;
  /// 0 = hardware concurrency. Results are bit-identical for any value.
  unsigned threads = 0;
};

/// Truncation parameters of the series bounds: layers below ell are summed
/// exactly, layers 2m and beyond are replaced by a geometric tail.
class BoundParams {
 public:
  BoundParams(int ell, int m);

  int ell() const noexcept { return ell_; }
  int m() const noexcept { return m_; }

 private:
  int ell_;
  int m_;
};

/// Sum of 1/n over the k-digit palindromes, accumulated in 120-bit fixed
/// point with every term floored (lower end) and ceiled (upper end).
Enclosure layer_sum_directed(Base b, unsigned k, unsigned precision_bits, unsigned threads = 0);

/// Layer sum as an enclosure, routed according to cfg.layer_mode.
Enclosure layer_sum_enclosure(Base b, unsigned k, const BoundsConfig& cfg = {});

struct BoundPair {
  Enclosure lower;
  Enclosure upper;
};

/// (b+2)/(b+1) x_b + 2 y_b / (b^c - b^(c-1)) + sum_{k=3}^{2c-1} s_{b,k},
/// c = ceil(ell/2). A lower bound for s_b.
Enclosure series_lower_bound(Base b, BoundParams p, const BoundsConfig& cfg = {});

/// ((b+2)/(b+1) + 2/(b^m - b^(m-1)) + sum_{k=ell}^{2m-1} b^ceil((k-2)/2)/(b^(k-1)+1)) x_b
///   + sum_{k=3}^{ell-1} s_{b,k}. An upper bound for s_b.
Enclosure series_upper_bound(Base b, BoundParams p, const BoundsConfig& cfg = {});

/// Both bounds, sharing the layer sums they have in common.
BoundPair series_bounds(Base b, BoundParams p, const BoundsConfig& cfg = {});

/// Closed-form bounds from ell = 3, m = 2 with no layer sums. The upper end
/// equals series_upper_bound there; the lower end omits s_{b,3}, so it sits
/// below series_lower_bound.
BoundPair simple_bounds(Base b, const BoundsConfig& cfg = {});

/// b^(3/2) / (sqrt(b) - 1), from counting at most b^((k+1)/2) palindromes per layer.
Enclosure crude_upper(Base b, const BoundsConfig& cfg = {});

/// sum_{k>=2m} b^ceil((k-2)/2) / b^(k-1) = 2 / ((b-1) b^(m-1)).
Enclosure tail_geometric(Base b, int m, const BoundsConfig& cfg = {});
BigRational tail_geometric_exact(Base b, int m);

/// (b+2)/(b+1) (log b + gamma).
Enclosure asymptotic_estimate(Base b, const BoundsConfig& cfg = {});

}  // namespace palsum
