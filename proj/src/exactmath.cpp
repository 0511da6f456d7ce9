#include "hcn/exactmath.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace hcn {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Witnesses 2..37 are a complete Miller-Rabin base set below 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& pp : prime_powers)
    for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : kWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses)
    if (!miller_rabin_round(n, a, d, s)) return false;
  return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime, got " +
                                std::to_string(p));
  const auto up = static_cast<std::uint64_t>(p);
  const auto r = static_cast<std::uint64_t>(floor_mod(a, p));
  if (r == 0) return 0;
  return pow_mod(r, (up - 1) / 2, up) == 1 ? 1 : -1;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  Factorization f;
  auto take = [&](std::uint64_t q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) f.prime_powers.push_back({q, e});
  };
  take(2);
  for (std::uint64_t q = 3; q <= n / q; q += 2) take(q);
  if (n > 1) f.prime_powers.push_back({n, 1});
  return f;
}

std::vector<std::int64_t> square_divisors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("square_divisors: every square divides 0");
  const std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  std::vector<std::int64_t> out{1};
  for (const auto& pp : factorize(mag).prime_powers) {
    const std::size_t base = out.size();
    std::int64_t power = 1;
    for (unsigned k = 1; k <= pp.exponent / 2; ++k) {
      power *= static_cast<std::int64_t>(pp.prime);
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton iteration from above; monotone decreasing to floor(sqrt(n)).
  std::uint64_t x = n / 2 + 1;
  std::uint64_t y = (x + n / x) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace hcn
