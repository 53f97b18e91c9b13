#include <doctest.h>

#include "oracles.hpp"
#include "palsum/exact.hpp"

using namespace palsum;

namespace {
BigRational q(const char* s) { return BigRational::parse(s); }
BigRational from(const mpq_class& v) { return BigRational(v); }
}  // namespace

TEST_CASE("BigRational basics") {
  CHECK(BigRational(mpz_class(6), mpz_class(-4)).str() == "-3/2");
  CHECK_THROWS_AS(BigRational(mpz_class(1), mpz_class(0)), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK(q("1/3") < q("1/2"));
  CHECK(pow(q("2/3"), 3) == q("8/27"));
}

TEST_CASE("pairwise accumulator equals sequential summation") {
  RationalAccumulator acc;
  mpq_class seq = 0;
  for (unsigned long n = 1; n <= 777; ++n) {
    acc.add_unit_fraction(n * n + 3);
    seq += mpq_class(1, n * n + 3);
  }
  CHECK(acc.total() == from(seq));
}

TEST_CASE("harmonic prefixes") {
  CHECK(harmonic_x(Base(2)) == 1);
  CHECK(harmonic_x(Base(10)) == q("7129/2520"));
  CHECK(harmonic_x(Base(3)) == q("3/2"));
  CHECK(harmonic_y(Base(2)) == q("1/2"));
  CHECK(harmonic_y(Base(10)) == q("4861/2520"));
  for (std::uint64_t b = 2; b <= 80; ++b) {
    const BigRational bb(mpz_class(static_cast<unsigned long>(b)));
    CHECK(harmonic_x(Base(b)) - harmonic_y(Base(b)) == BigRational(1) - BigRational(1) / bb);
    CHECK(harmonic_x(Base(b)) == from(oracle::harmonic_range(1, b - 1)));
  }
}

TEST_CASE("layer sum examples") {
  const auto r1 = layer_sum_exact(Base(10), 1);
  CHECK(r1.value == q("7129/2520"));
  CHECK(r1.term_count == 9);
  CHECK(layer_sum_exact(Base(2), 3).value == q("12/35"));
  CHECK(layer_sum_exact(Base(10), 2).value == q("7129/27720"));
}

TEST_CASE("first two layers in closed form for b in [2,64]") {
  for (std::uint64_t b = 2; b <= 64; ++b) {
    const BigRational x = harmonic_x(Base(b));
    CHECK(layer_sum_exact(Base(b), 1).value == x);
    CHECK(layer_sum_exact(Base(b), 2).value ==
          x / BigRational(mpz_class(static_cast<unsigned long>(b + 1))));
  }
}

TEST_CASE("layer sums match the brute-force oracle") {
  for (std::uint64_t b = 2; b <= 9; ++b)
    for (unsigned k = 1; k <= 5; ++k) {
      const auto rec = layer_sum_exact(Base(b), k);
      CHECK(rec.value == from(oracle::reciprocal_sum(oracle::filtered_palindromes(b, k))));
      CHECK(rec.value.sign() > 0);
      CHECK(rec.term_count == count_palindromes(Base(b), k));
    }
}

TEST_CASE("layer sums sit strictly inside the per-layer bounds") {
  for (std::uint64_t b = 2; b <= 16; ++b)
    for (unsigned k = 3; k <= 5; ++k) {
      const BigRational s = layer_sum_exact(Base(b), k).value;
      CHECK(from(oracle::layer_lower(b, k)) < s);
      CHECK(s < from(oracle::layer_upper(b, k)));
    }
}

TEST_CASE("partial sums") {
  CHECK(partial_sum_exact(Base(2), 3) == q("176/105"));
  CHECK(partial_sum_exact(Base(10), 1) == q("7129/2520"));
  CHECK(partial_sum_exact(Base(2), 1) == 1);
  for (std::uint64_t b : {2, 3, 5, 10}) {
    BigRational prev = 0;
    for (unsigned k = 1; k <= 6; ++k) {
      const BigRational s = partial_sum_exact(Base(b), k);
      CHECK(prev < s);
      prev = s;
    }
  }
  CHECK_THROWS_AS(partial_sum_exact(Base(2), 0), std::invalid_argument);
}

TEST_CASE("term budget") {
  ExactOptions tight{1000, 1};
  CHECK_NOTHROW(layer_sum_exact(Base(10), 6, tight));  // 900 terms
  try {
    layer_sum_exact(Base(10), 7, tight);
    FAIL("expected TermBudgetExceeded");
  } catch (const TermBudgetExceeded& e) {
    CHECK(e.required() == 9000);
    CHECK(e.budget() == 1000);
  }
  // 9 + 9 + 90 + 90 + 900 = 1098 > 1000 over the whole partial sum
  CHECK_THROWS_AS(partial_sum_exact(Base(10), 5, tight), TermBudgetExceeded);
}

TEST_CASE("threaded reduction is bit-identical") {
  for (std::uint64_t b : {7, 13, 20}) {
    const auto one = layer_sum_exact(Base(b), 5, ExactOptions{kDefaultTermBudget, 1});
    const auto four = layer_sum_exact(Base(b), 5, ExactOptions{kDefaultTermBudget, 4});
    CHECK(one.value.str() == four.value.str());
  }
}
