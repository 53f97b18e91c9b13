#pragma once

// Reference seven- and eight-decimal values, kept as strings so comparisons
// happen against the literal digits.

#include <array>
#include <cstdint>

namespace reference {

struct BoundRow {
  std::uint64_t b;
  const char* lower;
  const char* upper;
};

/// Bounds on s_b at ell = m = 5.
inline constexpr std::array<BoundRow, 15> kBounds{{
    {2, "2.2797059", "2.5828238"},  {3, "2.5870062", "2.7023567"},  {4, "2.7730961", "2.8314382"},
    {5, "2.9135124", "2.9481690"},  {6, "3.0292313", "3.0520161"},  {7, "3.1289733", "3.1450277"},
    {8, "3.2172728", "3.2291661"},  {9, "3.2968399", "3.3059903"},  {10, "3.3694527", "3.3767037"},
    {11, "3.4363567", "3.4422399"}, {12, "3.4984669", "3.5033337"}, {13, "3.5564805", "3.5605718"},
    {14, "3.6109440", "3.6144306"}, {15, "3.6622953", "3.6653014"}, {16, "3.7108920", "3.7135101"},
}};

struct TableRow {
  std::uint64_t b;
  const char* L;
  const char* M;
  const char* U;
};

/// L(b), M(b), U(b) for b in [3, 20].
inline constexpr std::array<TableRow, 18> kTable{{
    {3, "-0.62050401", "0.18128669", "0.98088799"},  {4, "-0.27694197", "0.10156088", "0.47976680"},
    {5, "-0.15303980", "0.06918746", "0.29135060"},  {6, "-0.09583068", "0.05134357", "0.19849920"},
    {7, "-0.06499252", "0.04017479", "0.14533547"},  {8, "-0.04658631", "0.03260281", "0.11178921"},
    {9, "-0.03478306", "0.02717043", "0.08912266"},  {10, "-0.02679941", "0.02310516", "0.07300909"},
    {11, "-0.02117156", "0.01996245", "0.06109613"}, {12, "-0.01707119", "0.01746963", "0.05201026"},
    {13, "-0.01400177", "0.01545069", "0.04490303"}, {14, "-0.01165154", "0.01378717", "0.03922582"},
    {15, "-0.00981708", "0.01239658", "0.03461020"}, {16, "-0.00836134", "0.01121975", "0.03080080"},
    {17, "-0.00718938", "0.01021318", "0.02761573"}, {18, "-0.00623386", "0.00934426", "0.02492236"},
    {19, "-0.00544602", "0.00858800", "0.02262202"}, {20, "-0.00478989", "0.00792504", "0.02063996"},
}};

}  // namespace reference
