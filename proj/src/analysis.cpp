#include "palsum/analysis.hpp"

#include <stdexcept>
#include <string>

namespace palsum {

namespace {

using i128 = __int128;

constexpr std::uint64_t kKernelBaseLimit = std::uint64_t{1} << 24;

BigRational rat(std::int64_t v) { return BigRational(mpz_class(std::to_string(v))); }

std::int64_t base_for_kernel(Base b, std::uint64_t min_base) {
  if (b.value() < min_base)
    throw std::invalid_argument("kernel check needs b >= " + std::to_string(min_base));
  if (b.value() > kKernelBaseLimit) throw std::invalid_argument("kernel check base too large");
  return static_cast<std::int64_t>(b.value());
}

/// (d2 d1 d0) evaluated positionally; digits may equal the radix.
i128 word3(i128 radix, i128 d2, i128 d1, i128 d0) { return (d2 * radix + d1) * radix + d0; }

template <class SecondDenominator, class ClosedForm>
KernelReport run_kernel(Base base, KernelId id, std::int64_t a_lo, std::int64_t a_hi,
                        std::int64_t (*c_lo)(std::int64_t, std::int64_t),
                        std::int64_t (*c_hi)(std::int64_t, std::int64_t),
                        SecondDenominator second, ClosedForm closed) {
  const auto b = static_cast<std::int64_t>(base.value());
  KernelReport r{base, id, true, std::nullopt, 0, true, std::nullopt};
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t c = c_lo(b, a); c <= c_hi(b, a); ++c) {
      ++r.cases;
      const i128 first = word3(b + 1, a, c, a);
      const i128 diff = first - second(b, a, c);
      if (diff != closed(b, a, c) || diff >= 0) r.algebra_matches = false;
      // 1/first - 1/second > 0  <=>  first < second (both positive)
      if (diff >= 0 && r.all_hold) {
        r.all_hold = false;
        r.counterexample = std::make_pair(a, c);
      }
    }
  }
  return r;
}

}  // namespace

Enclosure AlphaBeta::midpoint() const {
  const Enclosure two = Enclosure::from_rational(BigRational(2), alpha.precision_bits());
  return (alpha + beta) / two;
}

AlphaBeta alpha_beta(Base b, const BoundsConfig& cfg) {
  auto pair = series_bounds(b, kReferenceParams, cfg);
  return AlphaBeta{b, std::move(pair.upper), std::move(pair.lower)};
}

AlphaBetaCache::AlphaBetaCache(BoundsConfig cfg) : cfg_(cfg) {}

const AlphaBeta& AlphaBetaCache::get(Base b) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(b.value());
  if (it != entries_.end()) return it->second;
  auto [pos, inserted] = entries_.emplace(b.value(), alpha_beta(b, cfg_));
  if (progress_) progress_(b.value());
  return pos->second;
}

ChainReport verify_monotone_chain(Base b_max, AlphaBetaCache& cache) {
  ChainReport report;
  for (std::uint64_t b = 2; b < b_max.value(); ++b) {
    const AlphaBeta& cur = cache.get(Base(b));
    const AlphaBeta& next = cache.get(Base(b + 1));
    const bool ok = certainly_less(cur.alpha, next.beta);
    report.links.push_back(ChainLink{b, cur.alpha, next.beta, ok});
    report.verified = report.verified && ok;
  }
  return report;
}

ChainReport verify_monotone_chain(Base b_max, const BoundsConfig& cfg) {
  AlphaBetaCache cache(cfg);
  return verify_monotone_chain(b_max, cache);
}

const char* to_string(KernelId id) noexcept {
  switch (id) {
    case KernelId::middle_shift: return "middle-shift";
    case KernelId::carry: return "carry";
    case KernelId::lead_shift: return "lead-shift";
    case KernelId::tail_inequality: return "tail-inequality";
  }
  return "?";
}

KernelReport kernel_middle_shift_check(Base base) {
  const std::int64_t b = base_for_kernel(base, 4);
  return run_kernel(
      base, KernelId::middle_shift, 1, b / 2 - 1, [](std::int64_t, std::int64_t) -> std::int64_t { return 0; },
      [](std::int64_t b, std::int64_t a) { return b - (2 * a + 2); },
      [](i128 b, i128 a, i128 c) { return word3(b, a, 2 * a + c + 1, a); },
      [](i128 b, i128 a, i128 c) { return -b + a + c; });
}

KernelReport kernel_carry_check(Base base) {
  const std::int64_t b = base_for_kernel(base, 4);
  return run_kernel(
      base, KernelId::carry, 1, b / 2 - 1, [](std::int64_t b, std::int64_t a) { return b - (2 * a + 1); },
      [](std::int64_t b, std::int64_t) { return b; },
      [](i128 b, i128 a, i128 c) { return word3(b, a + 1, 2 * a + c + 2 - b, a + 1); },
      [](i128 b, i128 a, i128 c) { return -2 * b + a + c - 1; });
}

KernelReport kernel_lead_shift_check(Base base) {
  const std::int64_t b = base_for_kernel(base, 6);
  return run_kernel(
      base, KernelId::lead_shift, b / 2, b - 3, [](std::int64_t, std::int64_t) -> std::int64_t { return 0; },
      [](std::int64_t b, std::int64_t) { return b - 1; },
      [](i128 b, i128 a, i128 c) { return word3(b, a + 2, c, a + 2); },
      [](i128 b, i128 a, i128 c) { return -2 * b * b + 2 * a * b + a + c - 2; });
}

KernelReport tail_inequality_check(Base base, const BoundsConfig& cfg) {
  const unsigned p = cfg.precision_bits;
  const auto b = static_cast<std::int64_t>(base.value());
  const BigRational inv_b = BigRational(1) / rat(b);
  const Enclosure log_b = log(Enclosure::from_rational(rat(b), p));
  const Enclosure value = Enclosure::from_rational(inv_b, p) -
                          Enclosure::from_rational(BigRational(6) / (rat(b) * rat(b - 1)), p) * log_b -
                          Enclosure::from_rational(BigRational(5) * inv_b * inv_b, p);
  KernelReport r{base, KernelId::tail_inequality, true, std::nullopt, 0, true, std::nullopt};
  r.cases = 1;
  r.all_hold = value.sign() == Sign::positive;
  r.value = value;
  return r;
}

bool three_digit_shift_check(Base base, const ExactOptions& opts) {
  const std::uint64_t b = base.value();
  if (b < 6) throw std::invalid_argument("three-digit shift check needs b >= 6");
  const Base next(b + 1);
  const BigRational s3 = layer_sum_exact(base, 3, opts).value;
  const BigRational s3_next = layer_sum_exact(next, 3, opts).value;
  const BigRational bb = rat(static_cast<std::int64_t>(b));
  const BigRational tail = BigRational(2) * harmonic_y(next) / (bb * (bb + BigRational(1)));
  return s3_next + tail - s3 > BigRational(-5) / (bb * bb);
}

const char* to_string(MonotoneFn f) noexcept {
  switch (f) {
    case MonotoneFn::reciprocal: return "reciprocal";
    case MonotoneFn::logarithm: return "logarithm";
    case MonotoneFn::identity: return "identity";
    case MonotoneFn::neg_reciprocal: return "neg-reciprocal";
    case MonotoneFn::neg_logarithm: return "neg-logarithm";
    case MonotoneFn::neg_identity: return "neg-identity";
  }
  return "?";
}

SandwichReport sum_integral_sandwich(MonotoneFn f, std::int64_t a, std::int64_t b,
                                     const BoundsConfig& cfg) {
  if (a >= b) throw std::invalid_argument("sandwich needs a < b");
  const unsigned p = cfg.precision_bits;
  const bool negated = f == MonotoneFn::neg_reciprocal || f == MonotoneFn::neg_logarithm ||
                       f == MonotoneFn::neg_identity;
  const MonotoneFn base_fn = !negated                          ? f
                             : f == MonotoneFn::neg_reciprocal ? MonotoneFn::reciprocal
                             : f == MonotoneFn::neg_logarithm  ? MonotoneFn::logarithm
                                                               : MonotoneFn::identity;
  auto exact = [p](const BigRational& q) { return Enclosure::from_rational(q, p); };

  Enclosure diff(p), fa(p), fb(p);
  bool increasing = true;
  switch (base_fn) {
    case MonotoneFn::identity: {
      const BigRational sum = rat(a + b) * rat(b - a + 1) / BigRational(2);
      const BigRational integral = (rat(b) * rat(b) - rat(a) * rat(a)) / BigRational(2);
      diff = exact(sum - integral);
      fa = exact(rat(a));
      fb = exact(rat(b));
      break;
    }
    case MonotoneFn::reciprocal: {
      if (a < 1) throw std::invalid_argument("reciprocal needs a >= 1");
      Enclosure sum(p);
      for (std::int64_t n = a; n <= b; ++n) sum += exact(BigRational(1) / rat(n));
      diff = sum - (log(exact(rat(b))) - log(exact(rat(a))));
      fa = exact(BigRational(1) / rat(a));
      fb = exact(BigRational(1) / rat(b));
      increasing = false;
      break;
    }
    case MonotoneFn::logarithm: {
      if (a < 1) throw std::invalid_argument("logarithm needs a >= 1");
      // sum ln n = ln b! - ln (a-1)!;  int ln t = t ln t - t
      const Enclosure sum = lngamma_point(mpz_class(std::to_string(b + 1)), p) -
                            lngamma_point(mpz_class(std::to_string(a)), p);
      fa = log(exact(rat(a)));
      fb = log(exact(rat(b)));
      const Enclosure integral = exact(rat(b)) * fb - exact(rat(a)) * fa - exact(rat(b - a));
      diff = sum - integral;
      break;
    }
    default: break;
  }
  if (negated) {
    diff = -diff;
    fa = -fa;
    fb = -fb;
    increasing = !increasing;
  }
  SandwichReport r{false, diff, increasing ? fa : fb, increasing ? fb : fa};
  r.holds = mpfr_greaterequal_p(r.sum_minus_integral.lo(), r.lower.hi()) &&
            mpfr_lessequal_p(r.sum_minus_integral.hi(), r.upper.lo());
  return r;
}

bool sum_integral_sandwich_check(MonotoneFn f, std::int64_t a, std::int64_t b,
                                 const BoundsConfig& cfg) {
  return sum_integral_sandwich(f, a, b, cfg).holds;
}

TableRow table_row(Base b, AlphaBetaCache& cache) {
  if (b.value() < 3) throw std::invalid_argument("table rows need b >= 3");
  const AlphaBeta& prev = cache.get(Base(b.value() - 1));
  const AlphaBeta& cur = cache.get(b);
  const AlphaBeta& next = cache.get(Base(b.value() + 1));
  return TableRow{b.value(), square(cur.beta) - prev.alpha * next.alpha,
                  square(cur.midpoint()) - prev.midpoint() * next.midpoint(),
                  square(cur.alpha) - prev.beta * next.beta};
}

TableRow table_row(Base b, const BoundsConfig& cfg) {
  AlphaBetaCache cache(cfg);
  return table_row(b, cache);
}

ScanReport logconcavity_scan(Base b_min, Base b_max, AlphaBetaCache& cache) {
  if (b_min.value() < 3) throw std::invalid_argument("scan needs b_min >= 3");
  if (b_min > b_max) throw std::invalid_argument("scan needs b_min <= b_max");
  ScanReport report;
  for (std::uint64_t b = b_min.value(); b <= b_max.value(); ++b) {
    const TableRow row = table_row(Base(b), cache);
    report.entries.push_back(ScanEntry{b, row.L.sign(), row.M.sign(), row.U.sign()});
    report.all_m_positive = report.all_m_positive && row.M.sign() == Sign::positive;
  }
  return report;
}

ScanReport logconcavity_scan(Base b_min, Base b_max, const BoundsConfig& cfg) {
  AlphaBetaCache cache(cfg);
  return logconcavity_scan(b_min, b_max, cache);
}

bool AsymptoticReport::differences_positive() const {
  for (const auto& [b, d] : midpoint_differences)
    if (d.sign() != Sign::positive) return false;
  return true;
}

bool AsymptoticReport::differences_decreasing(std::uint64_t from) const {
  for (std::size_t i = 0; i + 1 < midpoint_differences.size(); ++i) {
    if (midpoint_differences[i].first < from) continue;
    if (!certainly_less(midpoint_differences[i + 1].second, midpoint_differences[i].second))
      return false;
  }
  return true;
}

AsymptoticReport asymptotic_error_metric(Base b_min, Base b_max, AlphaBetaCache& cache) {
  if (b_min > b_max) throw std::invalid_argument("asymptotic metric needs b_min <= b_max");
  const BoundsConfig& cfg = cache.config();
  AsymptoticReport report;
  for (std::uint64_t b = b_min.value(); b <= b_max.value(); ++b) {
    const Enclosure mid = cache.get(Base(b)).midpoint();
    const Enclosure bb = Enclosure::from_rational(rat(static_cast<std::int64_t>(b)), cfg.precision_bits);
    const Enclosure dev = abs(mid - asymptotic_estimate(Base(b), cfg)) * bb / log(bb);
    if (dev.hi_double() > report.max_metric) {
      report.max_metric = dev.hi_double();
      report.argmax = b;
    }
    report.scaled_deviation.emplace_back(b, dev);
    if (b < b_max.value())
      report.midpoint_differences.emplace_back(b, cache.get(Base(b + 1)).midpoint() - mid);
  }
  return report;
}

AsymptoticReport asymptotic_error_metric(Base b_min, Base b_max, const BoundsConfig& cfg) {
  AlphaBetaCache cache(cfg);
  return asymptotic_error_metric(b_min, b_max, cache);
}

}  // namespace palsum
