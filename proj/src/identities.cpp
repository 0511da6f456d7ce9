#include "hcn/identities.hpp"

#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "hcn/exactmath.hpp"
#include "hcn/montgomery.hpp"

namespace hcn {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 6> kNames = {{
    {IdentityId::theorem1, "theorem1"},
    {IdentityId::classical2p, "classical"},
    {IdentityId::lemma1_census, "lemma1"},
    {IdentityId::reindex, "reindex"},
    {IdentityId::vanishing, "vanishing"},
    {IdentityId::mass_formula, "mass"},
}};

void require_prime(std::int64_t p, const char* what) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument(std::string(what) + ": p must be prime, got " + std::to_string(p));
}

void require_prime_above_3(std::int64_t p, const char* what) {
  require_prime(p, what);
  if (p <= 3) throw std::invalid_argument(std::string(what) + ": p must exceed 3, got " + std::to_string(p));
}

// Largest T >= 0 with T^2 < bound, for bound >= 1.
std::int64_t strict_root(std::int64_t bound) {
  return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(bound - 1)));
}

IdentityReport make_report(std::int64_t p, IdentityId id, Twelfth lhs, Twelfth rhs) {
  return {p, id, lhs, rhs, lhs == rhs};
}

// Sum of H_w(t^2 - p) over t^2 < p with t = parity (mod 2).
Twelfth parity_sum(std::int64_t p, std::int64_t parity, HurwitzCache& hurwitz, bool absolute) {
  const std::int64_t T = strict_root(p);
  Twelfth sum;
  for (std::int64_t t = -T; t <= T; ++t) {
    if (floor_mod(t, 2) != parity) continue;
    Twelfth v = hurwitz(t * t - p);
    if (absolute && v < Twelfth{}) v = -v;
    sum += v;
  }
  return sum;
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<SumTerm> theorem1_terms(std::int64_t p, HurwitzCache& hurwitz) {
  require_prime(p, "theorem1_terms");
  const std::int64_t T = strict_root(p);
  std::vector<SumTerm> terms;
  terms.reserve(static_cast<std::size_t>(2 * T + 1));
  for (std::int64_t t = -T; t <= T; ++t) terms.push_back({t, hurwitz(t * t - p)});
  return terms;
}

Twelfth theorem1_sum(std::int64_t p) {
  HurwitzCache cache;
  return theorem1_sum(p, cache);
}

Twelfth theorem1_sum(std::int64_t p, HurwitzCache& hurwitz) {
  Twelfth sum;
  for (const auto& term : theorem1_terms(p, hurwitz)) sum += term.value;
  return sum;
}

IdentityReport check_theorem1(std::int64_t p) {
  HurwitzCache cache;
  return check_theorem1(p, cache);
}

IdentityReport check_theorem1(std::int64_t p, HurwitzCache& hurwitz) {
  // (p - 2)/3 = 4(p - 2)/12
  return make_report(p, IdentityId::theorem1, theorem1_sum(p, hurwitz),
                     Twelfth::from_twelfths(4 * (p - 2)));
}

IdentityReport check_classical(std::int64_t p) {
  HurwitzCache cache;
  return check_classical(p, cache);
}

IdentityReport check_classical(std::int64_t p, HurwitzCache& hurwitz) {
  require_prime(p, "check_classical");
  const std::int64_t T = strict_root(4 * p);
  Twelfth sum;
  for (std::int64_t t = -T; t <= T; ++t) sum += hurwitz(t * t - 4 * p);
  return make_report(p, IdentityId::classical2p, sum, Twelfth::whole(2 * p));
}

IdentityReport check_lemma1(std::int64_t p) {
  HurwitzCache cache;
  return check_lemma1(p, cache);
}

IdentityReport check_lemma1(std::int64_t p, HurwitzCache& hurwitz) {
  require_prime_above_3(p, "check_lemma1");
  const TraceCensus census = trace_census(p);
  const std::int64_t T = strict_root(4 * p);
  std::set<std::int64_t> traces;
  for (std::int64_t t = -T; t <= T; ++t) traces.insert(t);
  for (const auto& [t, n] : census.counts) traces.insert(t);

  Twelfth predicted_total;
  for (std::int64_t t : traces) {
    const Twelfth predicted = predicted_census_count(p, t, hurwitz);
    const Twelfth observed = Twelfth::whole(census.count(t));
    if (predicted != observed) return make_report(p, IdentityId::lemma1_census, predicted, observed);
    predicted_total += predicted;
  }
  return make_report(p, IdentityId::lemma1_census, predicted_total, Twelfth::whole((p - 1) * (p - 2)));
}

IdentityReport check_mass_formula(std::int64_t p) {
  require_prime_above_3(p, "check_mass_formula");
  return make_report(p, IdentityId::mass_formula, Twelfth::whole(trace_census(p).total()),
                     Twelfth::whole((p - 1) * (p - 2)));
}

IdentityReport check_reindex(std::int64_t p) {
  HurwitzCache cache;
  return check_reindex(p, cache);
}

IdentityReport check_reindex(std::int64_t p, HurwitzCache& hurwitz) {
  require_prime_above_3(p, "check_reindex");
  const std::int64_t T = strict_root(4 * p);
  Twelfth left;
  for (std::int64_t t = -T; t <= T; ++t)
    if (floor_mod(p + 1 - t, 4) == 0) left += hurwitz((t * t - 4 * p) / 4);
  // p = 1 mod 4 keeps odd t, p = 3 mod 4 keeps even t.
  const std::int64_t parity = floor_mod(p, 4) == 1 ? 1 : 0;
  return make_report(p, IdentityId::reindex, left, parity_sum(p, parity, hurwitz, false));
}

IdentityReport check_vanishing(std::int64_t p) {
  HurwitzCache cache;
  return check_vanishing(p, cache);
}

IdentityReport check_vanishing(std::int64_t p, HurwitzCache& hurwitz) {
  require_prime_above_3(p, "check_vanishing");
  const std::int64_t parity = floor_mod(p, 4) == 1 ? 0 : 1;
  return make_report(p, IdentityId::vanishing, parity_sum(p, parity, hurwitz, true), Twelfth{});
}

bool checker_accepts(IdentityId id, std::int64_t p) {
  switch (id) {
    case IdentityId::theorem1:
    case IdentityId::classical2p:
      return p >= 2;
    default:
      return p > 3;
  }
}

IdentityReport run_check(IdentityId id, std::int64_t p, HurwitzCache& hurwitz) {
  switch (id) {
    case IdentityId::theorem1:
      return check_theorem1(p, hurwitz);
    case IdentityId::classical2p:
      return check_classical(p, hurwitz);
    case IdentityId::lemma1_census:
      return check_lemma1(p, hurwitz);
    case IdentityId::reindex:
      return check_reindex(p, hurwitz);
    case IdentityId::vanishing:
      return check_vanishing(p, hurwitz);
    case IdentityId::mass_formula:
      return check_mass_formula(p);
  }
  throw std::invalid_argument("run_check: unknown identity");
}

}  // namespace hcn
