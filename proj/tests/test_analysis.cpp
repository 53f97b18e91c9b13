#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "palsum/analysis.hpp"
#include "reference_values.hpp"

using namespace palsum;

namespace {

bool within(const Enclosure& e, const std::string& literal, const char* tol) {
  const BigRational v(oracle::decimal(literal)), t = BigRational::parse(tol);
  return Enclosure::hull(Enclosure::from_rational(v - t, 256), Enclosure::from_rational(v + t, 256)).contains(e);
}

std::int64_t word(std::int64_t r, std::int64_t d2, std::int64_t d1, std::int64_t d0) {
  return d2 * r * r + d1 * r + d0;
}

}  // namespace

TEST_CASE("alpha and beta bracket each other") {
  for (std::uint64_t b = 2; b <= 30; ++b) {
    const auto ab = alpha_beta(Base(b));
    CHECK(certainly_less(ab.beta, ab.alpha));
    const auto mid = ab.midpoint();
    CHECK(certainly_less(ab.beta, mid));
    CHECK(certainly_less(mid, ab.alpha));
  }
}

TEST_CASE("cache returns the same values and reports new bases once") {
  AlphaBetaCache cache;
  int calls = 0;
  cache.set_progress([&](std::uint64_t) { ++calls; });
  const auto& first = cache.get(Base(9));
  const auto& again = cache.get(Base(9));
  CHECK(&first == &again);
  CHECK(calls == 1);
  const auto direct = alpha_beta(Base(9));
  CHECK(direct.alpha.upper_decimal(30) == first.alpha.upper_decimal(30));
}

TEST_CASE("monotone chain") {
  const auto r = verify_monotone_chain(Base(16));
  CHECK(r.verified);
  CHECK(r.links.size() == 14);
  for (const auto& link : r.links) CHECK(link.separated);
  const auto trivial = verify_monotone_chain(Base(2));
  CHECK(trivial.verified);
  CHECK(trivial.links.empty());
}

TEST_CASE("three-digit kernels hold with the closed-form differences") {
  for (std::uint64_t b : {50, 51, 64, 100, 200}) {
    for (const auto& r : {kernel_middle_shift_check(Base(b)), kernel_carry_check(Base(b)),
                          kernel_lead_shift_check(Base(b))}) {
      CHECK_MESSAGE(r.all_hold, to_string(r.kernel) << " b=" << b);
      CHECK(r.algebra_matches);
      CHECK_FALSE(r.counterexample.has_value());
      CHECK(r.cases > 0);
    }
  }
}

TEST_CASE("kernel cases match an independent enumeration") {
  for (std::int64_t b : {50, 51, 64}) {
    std::uint64_t mid = 0, carry = 0, lead = 0;
    bool ok = true;
    for (std::int64_t a = 1; a <= b / 2 - 1; ++a) {
      for (std::int64_t c = 0; c <= b - 2 * a - 2; ++c, ++mid)
        ok = ok && word(b + 1, a, c, a) < word(b, a, 2 * a + c + 1, a);
      for (std::int64_t c = b - 2 * a - 1; c <= b; ++c, ++carry)
        ok = ok && word(b + 1, a, c, a) < word(b, a + 1, 2 * a + c + 2 - b, a + 1);
    }
    for (std::int64_t a = b / 2; a <= b - 3; ++a)
      for (std::int64_t c = 0; c <= b - 1; ++c, ++lead) ok = ok && word(b + 1, a, c, a) < word(b, a + 2, c, a + 2);
    CHECK(ok);
    const auto base = Base(static_cast<std::uint64_t>(b));
    CHECK(kernel_middle_shift_check(base).cases == mid);
    CHECK(kernel_carry_check(base).cases == carry);
    CHECK(kernel_lead_shift_check(base).cases == lead);
  }
}

TEST_CASE("kernel preconditions") {
  CHECK_THROWS_AS(kernel_middle_shift_check(Base(3)), std::invalid_argument);
  CHECK_THROWS_AS(kernel_lead_shift_check(Base(5)), std::invalid_argument);
  CHECK_THROWS_AS(three_digit_shift_check(Base(5)), std::invalid_argument);
  CHECK(std::string(to_string(KernelId::carry)) == "carry");
}

TEST_CASE("tail inequality") {
  const auto ten = tail_inequality_check(Base(10));
  CHECK_FALSE(ten.all_hold);
  REQUIRE(ten.value);
  CHECK(std::abs(ten.value->mid_double() - -0.10350567286627) < 1e-13);
  const auto fifty = tail_inequality_check(Base(50));
  CHECK(fifty.all_hold);
  CHECK(std::abs(fifty.value->mid_double() - 0.00841953549691066) < 1e-15);
  CHECK(std::abs(tail_inequality_check(Base(1000)).value->mid_double() - 0.000953511980306414) < 1e-16);
  CHECK_FALSE(tail_inequality_check(Base(25)).all_hold);
  CHECK(tail_inequality_check(Base(26)).all_hold);
}

TEST_CASE("three-digit shift inequality") {
  for (std::uint64_t b : {50, 51, 100}) CHECK(three_digit_shift_check(Base(b)));
}

TEST_CASE("sum-integral sandwich examples") {
  const auto h = sum_integral_sandwich(MonotoneFn::reciprocal, 1, 9);
  CHECK(h.holds);
  CHECK(std::abs(h.sum_minus_integral.mid_double() - 0.631743676632035) < 1e-14);
  const auto l = sum_integral_sandwich(MonotoneFn::logarithm, 1, 10);
  CHECK(l.holds);
  CHECK(std::abs(l.sum_minus_integral.mid_double() - 1.07856164313506) < 1e-13);
  const auto id = sum_integral_sandwich(MonotoneFn::identity, 3, 8);
  CHECK(id.sum_minus_integral.contains(BigRational::parse("11/2")));
  CHECK_THROWS_AS(sum_integral_sandwich(MonotoneFn::identity, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(sum_integral_sandwich(MonotoneFn::logarithm, 0, 4), std::invalid_argument);
}

TEST_CASE("sandwich holds on random instances") {
  std::mt19937_64 rng(99);
  const MonotoneFn fns[] = {MonotoneFn::reciprocal,     MonotoneFn::logarithm,     MonotoneFn::identity,
                            MonotoneFn::neg_reciprocal, MonotoneFn::neg_logarithm, MonotoneFn::neg_identity};
  for (int i = 0; i < 200; ++i) {
    const MonotoneFn f = fns[rng() % 6];
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t b = a + 1 + static_cast<std::int64_t>(rng() % 5000);
    CHECK_MESSAGE(sum_integral_sandwich_check(f, a, b), to_string(f) << " [" << a << "," << b << "]");
  }
}

TEST_CASE("table rows") {
  for (const auto& row : reference::kTable) {
    if (row.b != 3 && row.b != 10 && row.b != 20) continue;
    const auto r = table_row(Base(row.b));
    CHECK(within(r.L, row.L, "2/100000000"));
    CHECK(within(r.M, row.M, "2/100000000"));
    CHECK(within(r.U, row.U, "2/100000000"));
    CHECK(certainly_less(r.L, r.M));
    CHECK(certainly_less(r.M, r.U));
  }
  CHECK_THROWS_AS(table_row(Base(2)), std::invalid_argument);
}

TEST_CASE("log-concavity scan on a short range") {
  AlphaBetaCache cache;
  const auto s = logconcavity_scan(Base(3), Base(30), cache);
  CHECK(s.all_m_positive);
  CHECK(s.entries.size() == 28);
  CHECK(s.entries.front().L == Sign::negative);
  CHECK(s.entries.front().U == Sign::positive);
  CHECK_THROWS_AS(logconcavity_scan(Base(2), Base(5), cache), std::invalid_argument);
}

TEST_CASE("asymptotic metric on a short range") {
  AlphaBetaCache cache;
  const auto r = asymptotic_error_metric(Base(2), Base(40), cache);
  CHECK(r.max_metric <= 3.0);
  CHECK(r.scaled_deviation.size() == 39);
  CHECK(r.midpoint_differences.size() == 38);
  CHECK(r.differences_positive());
  CHECK(r.differences_decreasing(10));
}
