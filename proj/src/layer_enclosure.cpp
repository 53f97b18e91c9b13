#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "palindrome_walk.hpp"
#include "palsum/bounds.hpp"

namespace palsum {

namespace {

using u128 = unsigned __int128;

// Terms are floor/ceil(2^120 / n). Even the k = 1 layer stays below 2^7,
// so the 128-bit accumulator cannot overflow.
constexpr unsigned kFracBits = 120;
constexpr std::uint64_t kTop = std::uint64_t{1} << (kFracBits - 64);

inline std::uint64_t div_128_by_64(std::uint64_t hi, std::uint64_t lo, std::uint64_t d,
                                   std::uint64_t& rem) {
  // Requires hi < d so the quotient fits in 64 bits.
#if defined(__x86_64__)
  std::uint64_t q;
  __asm__("divq %4" : "=a"(q), "=d"(rem) : "a"(lo), "d"(hi), "rm"(d));
  return q;
#else
  const u128 n = (static_cast<u128>(hi) << 64) | lo;
  rem = static_cast<std::uint64_t>(n % d);
  return static_cast<std::uint64_t>(n / d);
#endif
}

struct FixedSum {
  u128 lo = 0;
  u128 hi = 0;

  void add_reciprocal(std::uint64_t n) {
    const std::uint64_t q_hi = kTop / n;
    std::uint64_t rem;
    const std::uint64_t q_lo = div_128_by_64(kTop % n, 0, n, rem);
    const u128 q = (static_cast<u128>(q_hi) << 64) | q_lo;
    lo += q;
    hi += q + (rem != 0);
  }
  FixedSum& operator+=(const FixedSum& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
};

mpz_class to_mpz(u128 v) {
  const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(v >> 64),
                                  static_cast<std::uint64_t>(v)};
  mpz_class r;
  mpz_import(r.get_mpz_t(), 2, 1, sizeof(std::uint64_t), 0, 0, limbs);
  return r;
}

FixedSum fixed_layer_sum(std::uint64_t b, unsigned k, unsigned threads) {
  FixedSum total;
  std::mutex mu;
  std::atomic<std::uint64_t> next{1};
  auto worker = [&] {
    FixedSum local;
    for (std::uint64_t a; (a = next.fetch_add(1)) < b;)
      detail::for_each_palindrome_u64(b, k, a, a, [&](std::uint64_t n) { local.add_reciprocal(n); });
    std::lock_guard lock(mu);
    total += local;
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, b - 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return total;
}

Enclosure mpfr_layer_sum(Base b, unsigned k, unsigned precision_bits) {
  Enclosure sum(precision_bits);
  mpfr_t lo, hi, t;
  mpfr_inits2(precision_bits, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  auto stream = enumerate_palindromes(b, k);
  while (auto n = stream.next()) {
    mpfr_set_z(t, n->get_mpz_t(), MPFR_RNDU);
    mpfr_ui_div(t, 1, t, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_set_z(t, n->get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(t, 1, t, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  sum = Enclosure::from_endpoints(lo, hi);
  mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  return sum;
}

}  // namespace

Enclosure layer_sum_directed(Base b, unsigned k, unsigned precision_bits, unsigned threads) {
  if (k < 1) throw std::invalid_argument("digit length k must be >= 1");
  if (!detail::fits_u64(b.value(), k)) return mpfr_layer_sum(b, k, precision_bits);
  const FixedSum s = fixed_layer_sum(b.value(), k, threads);
  return Enclosure::from_scaled(to_mpz(s.lo), to_mpz(s.hi), -static_cast<long>(kFracBits),
                                precision_bits);
}

Enclosure layer_sum_enclosure(Base b, unsigned k, const BoundsConfig& cfg) {
  const mpz_class count = count_palindromes(b, k);
  bool exact = false;
  switch (cfg.layer_mode) {
    case LayerMode::exact: exact = true; break;
    case LayerMode::directed: exact = false; break;
    case LayerMode::automatic:
      exact = count <= mpz_class(std::to_string(std::min(cfg.exact_term_limit, cfg.term_budget)));
      break;
  }
  if (exact) {
    const auto rec = layer_sum_exact(b, k, ExactOptions{cfg.term_budget, cfg.threads});
    return Enclosure::from_rational(rec.value, cfg.precision_bits);
  }
  return layer_sum_directed(b, k, cfg.precision_bits, cfg.threads);
}

}  // namespace palsum
