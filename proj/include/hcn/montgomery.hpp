#pragma once

#include <cstdint>
#include <map>

#include "hcn/hurwitz.hpp"
#include "hcn/twelfth.hpp"

namespace hcn {

/// Montgomery curve B y^2 = x^3 + A x^2 + x over F_p.
struct CurveParams {
  std::int64_t p = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;

  /// B (A^2 - 4) != 0 mod p.
  bool is_nonsingular() const;
  /// Throws std::invalid_argument unless p is a prime > 3, A and B lie in
  /// [0, p), and the curve is non-singular.
  void validate() const;
};

/// Number of non-singular (A, B) pairs over F_p with a given trace of
/// Frobenius t = p + 1 - #M_{A,B}(F_p).
struct TraceCensus {
  std::int64_t p = 0;
  std::map<std::int64_t, std::int64_t> counts;

  /// counts[t], or 0 when t never occurs.
  std::int64_t count(std::int64_t t) const;
  std::int64_t total() const;
};

/// Sum over x in F_p of chi(x^3 + A x^2 + x). Throws std::invalid_argument
/// unless p is an odd prime.
std::int64_t character_sum(std::int64_t p, std::int64_t A);

/// #M_{A,B}(F_p) including the point at infinity, computed as
/// p + 1 + chi(B) * character_sum(p, A).
std::int64_t point_count(const CurveParams& c);

/// Census over every non-singular (A, B). One character sum per A; the
/// (p-1)/2 square values of B land on trace -S_A and the rest on +S_A.
/// Throws std::invalid_argument unless p is a prime > 3.
TraceCensus trace_census(std::int64_t p);

/// 3(p-1) H_w((t^2 - 4p)/4) when 4 | p+1-t and t^2 < 4p, else 0.
/// Throws std::logic_error if a nonzero prediction is not a whole number.
Twelfth predicted_census_count(std::int64_t p, std::int64_t t);
Twelfth predicted_census_count(std::int64_t p, std::int64_t t, HurwitzCache& hurwitz);

}  // namespace hcn
