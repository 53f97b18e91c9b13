#include "palsum/bounds.hpp"

#include <map>
#include <stdexcept>

namespace palsum {

namespace {

BigRational rat(std::uint64_t v) { return BigRational(mpz_class(std::to_string(v))); }

BigRational power(Base b, int e) { return pow(rat(b.value()), static_cast<unsigned>(e)); }

int ceil_half(int v) { return (v + 1) / 2; }

/// (b+2)/(b+1)
BigRational two_layer_factor(Base b) { return rat(b.value() + 2) / rat(b.value() + 1); }

BigRational lower_closed_part(Base b, BoundParams p, const BigRational& x, const BigRational& y) {
  const int c = ceil_half(p.ell());
  return two_layer_factor(b) * x + BigRational(2) * y / (power(b, c) - power(b, c - 1));
}

BigRational upper_coefficient(Base b, BoundParams p) {
  BigRational coef = two_layer_factor(b) + BigRational(2) / (power(b, p.m()) - power(b, p.m() - 1));
  // Empty when 2m - 1 < ell.
  for (int k = p.ell(); k <= 2 * p.m() - 1; ++k)
    coef += power(b, ceil_half(k - 2)) / (power(b, k - 1) + BigRational(1));
  return coef;
}

int lower_last_layer(BoundParams p) { return 2 * ceil_half(p.ell()) - 1; }
int upper_last_layer(BoundParams p) { return p.ell() - 1; }

using LayerTable = std::map<int, Enclosure>;

LayerTable layers_up_to(Base b, int last, const BoundsConfig& cfg) {
  LayerTable t;
  for (int k = 3; k <= last; ++k) t.emplace(k, layer_sum_enclosure(b, static_cast<unsigned>(k), cfg));
  return t;
}

Enclosure assemble_lower(Base b, BoundParams p, const BigRational& x, const BigRational& y,
                         const LayerTable& layers, const BoundsConfig& cfg) {
  Enclosure sum = Enclosure::from_rational(lower_closed_part(b, p, x, y), cfg.precision_bits);
  for (int k = 3; k <= lower_last_layer(p); ++k) sum += layers.at(k);
  return sum;
}

Enclosure assemble_upper(Base b, BoundParams p, const BigRational& x, const LayerTable& layers,
                         const BoundsConfig& cfg) {
  Enclosure sum = Enclosure::from_rational(upper_coefficient(b, p) * x, cfg.precision_bits);
  for (int k = 3; k <= upper_last_layer(p); ++k) sum += layers.at(k);
  return sum;
}

}  // namespace

BoundParams::BoundParams(int ell, int m) : ell_(ell), m_(m) {
  if (ell < 3) throw std::invalid_argument("ell must be >= 3, got " + std::to_string(ell));
  if (m < 2) throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
}

Enclosure series_lower_bound(Base b, BoundParams p, const BoundsConfig& cfg) {
  const auto layers = layers_up_to(b, lower_last_layer(p), cfg);
  return assemble_lower(b, p, harmonic_x(b), harmonic_y(b), layers, cfg);
}

Enclosure series_upper_bound(Base b, BoundParams p, const BoundsConfig& cfg) {
  const auto layers = layers_up_to(b, upper_last_layer(p), cfg);
  return assemble_upper(b, p, harmonic_x(b), layers, cfg);
}

BoundPair series_bounds(Base b, BoundParams p, const BoundsConfig& cfg) {
  const auto layers = layers_up_to(b, std::max(lower_last_layer(p), upper_last_layer(p)), cfg);
  const BigRational x = harmonic_x(b);
  const BigRational y = harmonic_y(b);
  return BoundPair{assemble_lower(b, p, x, y, layers, cfg), assemble_upper(b, p, x, layers, cfg)};
}

BoundPair simple_bounds(Base b, const BoundsConfig& cfg) {
  const BoundParams p(3, 2);
  const BigRational x = harmonic_x(b);
  const BigRational lower = lower_closed_part(b, p, x, harmonic_y(b));
  return BoundPair{Enclosure::from_rational(lower, cfg.precision_bits),
                   Enclosure::from_rational(upper_coefficient(b, p) * x, cfg.precision_bits)};
}

Enclosure crude_upper(Base b, const BoundsConfig& cfg) {
  const Enclosure base = Enclosure::from_rational(rat(b.value()), cfg.precision_bits);
  const Enclosure root = sqrt(base);
  const Enclosure one = Enclosure::from_rational(BigRational(1), cfg.precision_bits);
  return base * root / (root - one);
}

BigRational tail_geometric_exact(Base b, int m) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  return BigRational(2) / (rat(b.value() - 1) * power(b, m - 1));
}

Enclosure tail_geometric(Base b, int m, const BoundsConfig& cfg) {
  return Enclosure::from_rational(tail_geometric_exact(b, m), cfg.precision_bits);
}

Enclosure asymptotic_estimate(Base b, const BoundsConfig& cfg) {
  const unsigned p = cfg.precision_bits;
  const Enclosure log_b = log(Enclosure::from_rational(rat(b.value()), p));
  return Enclosure::from_rational(two_layer_factor(b), p) * (log_b + euler_gamma(p));
}

}  // namespace palsum
