#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace hcn {

/// An exact rational number with fixed denominator 12.
///
/// Every weighted class number and Hurwitz class number lives in (1/12)Z,
/// so sums and integer multiples stay exact and equality is a plain
/// comparison of numerators.
class Twelfth {
 public:
  constexpr Twelfth() = default;

  /// The value num/12.
  static constexpr Twelfth from_twelfths(std::int64_t num) { return Twelfth(num); }
  /// The integer n, i.e. 12n/12.
  static constexpr Twelfth whole(std::int64_t n) { return Twelfth(12 * n); }

  constexpr std::int64_t twelfths() const { return num_; }
  constexpr bool is_integer() const { return num_ % 12 == 0; }
  /// Integer part; only meaningful when is_integer() holds.
  constexpr std::int64_t to_integer() const { return num_ / 12; }

  constexpr Twelfth operator-() const { return Twelfth(-num_); }
  constexpr Twelfth& operator+=(Twelfth o) {
    num_ += o.num_;
    return *this;
  }
  constexpr Twelfth& operator-=(Twelfth o) {
    num_ -= o.num_;
    return *this;
  }
  constexpr Twelfth& operator*=(std::int64_t k) {
    num_ *= k;
    return *this;
  }

  friend constexpr Twelfth operator+(Twelfth a, Twelfth b) { return a += b; }
  friend constexpr Twelfth operator-(Twelfth a, Twelfth b) { return a -= b; }
  friend constexpr Twelfth operator*(Twelfth a, std::int64_t k) { return a *= k; }
  friend constexpr Twelfth operator*(std::int64_t k, Twelfth a) { return a *= k; }

  friend constexpr bool operator==(Twelfth, Twelfth) = default;
  friend constexpr auto operator<=>(Twelfth, Twelfth) = default;

  /// Lowest-terms rendering: "1/2", "-1/12", "3".
  std::string to_string() const {
    const std::int64_t g = std::gcd(num_, std::int64_t{12});
    const std::int64_t n = g == 0 ? 0 : num_ / g;
    const std::int64_t d = g == 0 ? 1 : 12 / g;
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }

 private:
  constexpr explicit Twelfth(std::int64_t num) : num_(num) {}
  std::int64_t num_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Twelfth v) { return os << v.to_string(); }

}  // namespace hcn
