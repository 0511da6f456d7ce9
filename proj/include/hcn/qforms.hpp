#pragma once

#include <cstdint>
#include <vector>

#include "hcn/twelfth.hpp"

namespace hcn {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  constexpr std::int64_t discriminant() const { return b * b - 4 * a * c; }
  constexpr bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  /// -a < b <= a <= c, with b >= 0 when a == c or |b| == a.
  bool is_reduced() const;
  /// gcd(a, b, c) == 1.
  bool is_primitive() const;

  friend constexpr bool operator==(const QuadForm&, const QuadForm&) = default;
  friend constexpr auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// True for d < 0 with d = 0 or 1 (mod 4), i.e. d is the discriminant of an
/// imaginary quadratic order.
constexpr bool is_negative_discriminant(std::int64_t d) {
  if (d >= 0) return false;
  const std::int64_t r = ((d % 4) + 4) % 4;
  return r == 0 || r == 1;
}

/// The reduced primitive positive-definite forms of discriminant d, ordered
/// by (a, b). Throws std::invalid_argument unless is_negative_discriminant(d).
std::vector<QuadForm> reduced_forms(std::int64_t d);

/// h(d): the number of reduced primitive positive-definite forms of
/// discriminant d. Same precondition as reduced_forms.
std::int64_t class_number(std::int64_t d);

/// Weighted class number h_w(d). Total: h(-3)/3 at -3, h(-4)/2 at -4, h(d)
/// at every other negative discriminant, and 0 everywhere else (including
/// d >= 0 and d = 2, 3 mod 4).
Twelfth weighted_class_number(std::int64_t d);

}  // namespace hcn
