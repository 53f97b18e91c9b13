#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "palsum/bounds.hpp"

namespace palsum {

/// alpha_b / beta_b: upper and lower series bounds at ell = m = 5.
struct AlphaBeta {
  Base b;
  Enclosure alpha;
  Enclosure beta;

  /// (alpha + beta) / 2
  Enclosure midpoint() const;
};

inline const BoundParams kReferenceParams{5, 5};

AlphaBeta alpha_beta(Base b, const BoundsConfig& cfg = {});

/// Memoizes alpha_beta per base; sweeps over hundreds of bases reuse it.
class AlphaBetaCache {
 public:
  explicit AlphaBetaCache(BoundsConfig cfg = {});

  const AlphaBeta& get(Base b);
  const BoundsConfig& config() const noexcept { return cfg_; }

  /// Called once per newly computed base.
  void set_progress(std::function<void(std::uint64_t)> cb) { progress_ = std::move(cb); }

 private:
  BoundsConfig cfg_;
  std::mutex mu_;
  std::map<std::uint64_t, AlphaBeta> entries_;
  std::function<void(std::uint64_t)> progress_;
};

struct ChainLink {
  std::uint64_t b;
  Enclosure alpha_b;
  Enclosure beta_next;
  bool separated;  // alpha_b.hi < beta_{b+1}.lo
};

struct ChainReport {
  bool verified = true;
  std::vector<ChainLink> links;
};

/// Consecutive separation alpha_b < beta_{b+1} for b in [2, b_max - 1];
/// transitivity then orders every pair s_b < s_b' below b_max.
ChainReport verify_monotone_chain(Base b_max, AlphaBetaCache& cache);
ChainReport verify_monotone_chain(Base b_max, const BoundsConfig& cfg = {});

/// Three-digit comparisons behind s_{b+1,3} - s_{b,3}: each checks that
/// (a c a)_{b+1} < (some shifted three-digit word)_b over a range of (a, c).
enum class KernelId {
  middle_shift,  // (a (2a+c+1) a)_b, 1 <= a <= floor(b/2)-1, 0 <= c <= b-2a-2
  carry,         // ((a+1) (2a+c+2-b) (a+1))_b, same a, b-2a-1 <= c <= b
  lead_shift,    // ((a+2) c (a+2))_b, floor(b/2) <= a <= b-3, 0 <= c <= b-1
  tail_inequality,
};

const char* to_string(KernelId id) noexcept;

struct KernelReport {
  Base b;
  KernelId kernel;
  bool all_hold = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;
  std::uint64_t cases = 0;
  /// Every denominator difference equals the closed form and is negative.
  bool algebra_matches = true;
  /// Only for tail_inequality: 1/b - 6 log b / (b(b-1)) - 5/b^2.
  std::optional<Enclosure> value;
};

KernelReport kernel_middle_shift_check(Base b);
KernelReport kernel_carry_check(Base b);
KernelReport kernel_lead_shift_check(Base b);
KernelReport tail_inequality_check(Base b, const BoundsConfig& cfg = {});

/// s_{b+1,3} + 2 y_{b+1} / (b (b+1)) - s_{b,3} > -5 / b^2, decided exactly.
/// The middle term is the geometric lower bound for layers 4.. of base b+1.
bool three_digit_shift_check(Base b, const ExactOptions& opts = {});

/// Monotone functions with closed-form antiderivatives.
enum class MonotoneFn { reciprocal, logarithm, identity, neg_reciprocal, neg_logarithm, neg_identity };

const char* to_string(MonotoneFn f) noexcept;

struct SandwichReport {
  bool holds = false;
  Enclosure sum_minus_integral;
  Enclosure lower;  // min(f(a), f(b))
  Enclosure upper;  // max(f(a), f(b))
};

/// min(f(a), f(b)) <= sum_{n=a}^{b} f(n) - int_a^b f(t) dt <= max(f(a), f(b)).
SandwichReport sum_integral_sandwich(MonotoneFn f, std::int64_t a, std::int64_t b,
                                     const BoundsConfig& cfg = {});
bool sum_integral_sandwich_check(MonotoneFn f, std::int64_t a, std::int64_t b,
                                 const BoundsConfig& cfg = {});

/// L(b) = beta_b^2 - alpha_{b-1} alpha_{b+1}
/// M(b) = mid_b^2 - mid_{b-1} mid_{b+1}
/// U(b) = alpha_b^2 - beta_{b-1} beta_{b+1}
struct TableRow {
  std::uint64_t b;
  Enclosure L;
  Enclosure M;
  Enclosure U;
};

TableRow table_row(Base b, AlphaBetaCache& cache);
TableRow table_row(Base b, const BoundsConfig& cfg = {});

struct ScanEntry {
  std::uint64_t b;
  Sign L;
  Sign M;
  Sign U;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  bool all_m_positive = true;
};

ScanReport logconcavity_scan(Base b_min, Base b_max, AlphaBetaCache& cache);
ScanReport logconcavity_scan(Base b_min, Base b_max, const BoundsConfig& cfg = {});

struct AsymptoticReport {
  /// Upper end of max_b |mid_b - estimate_b| * b / log b.
  double max_metric = 0.0;
  std::uint64_t argmax = 0;
  std::vector<std::pair<std::uint64_t, Enclosure>> scaled_deviation;
  /// (b, mid_{b+1} - mid_b) for b in [b_min, b_max - 1].
  std::vector<std::pair<std::uint64_t, Enclosure>> midpoint_differences;

  bool differences_positive() const;
  /// Rigorously d_{b+1} < d_b for every b >= from.
  bool differences_decreasing(std::uint64_t from) const;
};

AsymptoticReport asymptotic_error_metric(Base b_min, Base b_max, AlphaBetaCache& cache);
AsymptoticReport asymptotic_error_metric(Base b_min, Base b_max, const BoundsConfig& cfg = {});

}  // namespace palsum
