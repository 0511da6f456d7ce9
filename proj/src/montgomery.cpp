#include "hcn/montgomery.hpp"

#include <stdexcept>
#include <string>

#include "hcn/exactmath.hpp"

namespace hcn {

namespace {

__extension__ using i128 = __int128;

void require_prime_above_3(std::int64_t p, const char* what) {
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument(std::string(what) + ": p must be a prime > 3, got " + std::to_string(p));
}

// Euler's criterion with the modulus already validated.
int chi(std::int64_t a, std::int64_t p) {
  const auto r = static_cast<std::uint64_t>(floor_mod(a, p));
  if (r == 0) return 0;
  const auto up = static_cast<std::uint64_t>(p);
  return pow_mod(r, (up - 1) / 2, up) == 1 ? 1 : -1;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<i128>(a) * b % p);
}

std::int64_t character_sum_unchecked(std::int64_t p, std::int64_t A) {
  A = floor_mod(A, p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    // x^3 + A x^2 + x = x (x (x + A) + 1)
    const std::int64_t inner = (mul_mod(x, (x + A) % p, p) + 1) % p;
    sum += chi(mul_mod(x, inner, p), p);
  }
  return sum;
}

}  // namespace

bool CurveParams::is_nonsingular() const {
  if (p <= 0) return false;
  const std::int64_t disc = floor_mod(mul_mod(floor_mod(A, p), floor_mod(A, p), p) - 4, p);
  return floor_mod(B, p) != 0 && disc != 0;
}

void CurveParams::validate() const {
  require_prime_above_3(p, "CurveParams");
  if (A < 0 || A >= p || B < 0 || B >= p)
    throw std::invalid_argument("CurveParams: A and B must lie in [0, p)");
  if (!is_nonsingular())
    throw std::invalid_argument("CurveParams: B(A^2 - 4) = 0, curve is singular");
}

std::int64_t TraceCensus::count(std::int64_t t) const {
  const auto it = counts.find(t);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t TraceCensus::total() const {
  std::int64_t s = 0;
  for (const auto& [t, n] : counts) s += n;
  return s;
}

std::int64_t character_sum(std::int64_t p, std::int64_t A) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("character_sum: p must be an odd prime, got " + std::to_string(p));
  return character_sum_unchecked(p, A);
}

std::int64_t point_count(const CurveParams& c) {
  c.validate();
  return c.p + 1 + chi(c.B, c.p) * character_sum_unchecked(c.p, c.A);
}

TraceCensus trace_census(std::int64_t p) {
  require_prime_above_3(p, "trace_census");
  TraceCensus census{p, {}};
  const std::int64_t half = (p - 1) / 2;
  for (std::int64_t A = 0; A < p; ++A) {
    if (floor_mod(A * A - 4, p) == 0) continue;
    const std::int64_t s = character_sum_unchecked(p, A);
    // t = p + 1 - (p + 1 + chi(B) s) = -chi(B) s
    census.counts[-s] += half;
    census.counts[s] += half;
  }
  return census;
}

Twelfth predicted_census_count(std::int64_t p, std::int64_t t) {
  HurwitzCache cache;
  return predicted_census_count(p, t, cache);
}

Twelfth predicted_census_count(std::int64_t p, std::int64_t t, HurwitzCache& hurwitz) {
  require_prime_above_3(p, "predicted_census_count");
  if (floor_mod(p + 1 - t, 4) != 0 || t * t >= 4 * p) return Twelfth{};
  const Twelfth v = 3 * (p - 1) * hurwitz((t * t - 4 * p) / 4);
  if (!v.is_integer())
    throw std::logic_error("predicted_census_count: non-integral prediction " + v.to_string() +
                           " at p=" + std::to_string(p) + " t=" + std::to_string(t));
  return v;
}

}  // namespace hcn
