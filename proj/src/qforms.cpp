#include "hcn/qforms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hcn/exactmath.hpp"

namespace hcn {

namespace {

void require_negative_discriminant(std::int64_t d) {
  if (!is_negative_discriminant(d))
    throw std::invalid_argument("class number requires d < 0 with d = 0,1 mod 4, got " +
                                std::to_string(d));
}

// Calls visit(form) for each reduced primitive form of discriminant d, in
// (a, b) order. a runs up to floor(sqrt(|d|/3)), b over (-a, a] with b = d mod 2.
template <typename Visit>
void for_each_reduced_form(std::int64_t d, Visit&& visit) {
  const std::int64_t n = -d;
  const auto a_max = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n / 3)));
  const std::int64_t parity = n & 1;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    const std::int64_t four_a = 4 * a;
    std::int64_t b = -a + 1;
    if (floor_mod(b, 2) != parity) ++b;
    for (; b <= a; b += 2) {
      const std::int64_t num = b * b + n;
      if (num % four_a != 0) continue;
      const std::int64_t c = num / four_a;
      if (c < a) continue;
      if ((a == c || b == a) && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      visit(QuadForm{a, b, c});
    }
  }
}

}  // namespace

bool QuadForm::is_reduced() const {
  if (!(-a < b && b <= a && a <= c)) return false;
  if ((a == c || b == a || b == -a) && b < 0) return false;
  return true;
}

bool QuadForm::is_primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

std::vector<QuadForm> reduced_forms(std::int64_t d) {
  require_negative_discriminant(d);
  std::vector<QuadForm> out;
  for_each_reduced_form(d, [&](const QuadForm& f) { out.push_back(f); });
  return out;
}

std::int64_t class_number(std::int64_t d) {
  require_negative_discriminant(d);
  std::int64_t h = 0;
  for_each_reduced_form(d, [&](const QuadForm&) { ++h; });
  return h;
}

Twelfth weighted_class_number(std::int64_t d) {
  if (!is_negative_discriminant(d)) return Twelfth{};
  if (d == -3) return Twelfth::from_twelfths(4 * class_number(d));
  if (d == -4) return Twelfth::from_twelfths(6 * class_number(d));
  return Twelfth::whole(class_number(d));
}

}  // namespace hcn
