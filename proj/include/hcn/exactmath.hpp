#pragma once

#include <cstdint>
#include <vector>

#include "hcn/twelfth.hpp"

namespace hcn {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
  std::vector<PrimePower> prime_powers;

  std::uint64_t value() const;
};

/// Deterministic for every 64-bit input (Miller-Rabin, fixed witness set).
bool is_prime(std::uint64_t n);

/// base^exp mod m, for m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Quadratic character of a modulo an odd prime p, via Euler's criterion.
/// Throws std::invalid_argument when p is not an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Trial division. Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

/// All d >= 1 with d*d | n, ascending. Throws std::invalid_argument for n == 0.
std::vector<std::int64_t> square_divisors(std::int64_t n);

/// Largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n);

/// n mod m in [0, m), m > 0.
constexpr std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace hcn
