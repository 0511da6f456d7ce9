#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hcn/hurwitz.hpp"
#include "hcn/twelfth.hpp"

namespace hcn {

enum class IdentityId { theorem1, classical2p, lemma1_census, reindex, vanishing, mass_formula };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Outcome of one identity check at one prime. pass == (lhs == rhs).
struct IdentityReport {
  std::int64_t prime = 0;
  IdentityId identity = IdentityId::theorem1;
  Twelfth lhs;
  Twelfth rhs;
  bool pass = false;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

struct SumTerm {
  std::int64_t t;
  Twelfth value;
};

/// (t, H_w(t^2 - p)) for every integer t with t^2 < p, ascending in t.
std::vector<SumTerm> theorem1_terms(std::int64_t p, HurwitzCache& hurwitz);

/// Sum over t^2 < p of H_w(t^2 - p). Throws std::invalid_argument unless p is prime.
Twelfth theorem1_sum(std::int64_t p);
Twelfth theorem1_sum(std::int64_t p, HurwitzCache& hurwitz);

/// lhs = theorem1_sum(p), rhs = (p - 2)/3.
IdentityReport check_theorem1(std::int64_t p);
IdentityReport check_theorem1(std::int64_t p, HurwitzCache& hurwitz);

/// lhs = sum over t^2 < 4p of H_w(t^2 - 4p), rhs = 2p.
IdentityReport check_classical(std::int64_t p);
IdentityReport check_classical(std::int64_t p, HurwitzCache& hurwitz);

/// Census against the predicted counts at every trace. When all traces agree,
/// lhs is the predicted total and rhs is (p-1)(p-2); otherwise lhs and rhs are
/// the predicted and observed counts at the first disagreeing trace.
IdentityReport check_lemma1(std::int64_t p);
IdentityReport check_lemma1(std::int64_t p, HurwitzCache& hurwitz);

/// lhs = census total, rhs = (p-1)(p-2).
IdentityReport check_mass_formula(std::int64_t p);

/// lhs = sum over t = p+1 (mod 4), t^2 < 4p of H_w((t^2 - 4p)/4);
/// rhs = sum over t^2 < p of H_w(t^2 - p), t odd when p = 1 mod 4 and even
/// when p = 3 mod 4.
IdentityReport check_reindex(std::int64_t p);
IdentityReport check_reindex(std::int64_t p, HurwitzCache& hurwitz);

/// The terms H_w(t^2 - p) of the opposite parity class to check_reindex's
/// right side. lhs = sum of |term|, rhs = 0, so pass means every term is 0.
IdentityReport check_vanishing(std::int64_t p);
IdentityReport check_vanishing(std::int64_t p, HurwitzCache& hurwitz);

/// Dispatch by id. p must lie in the checker's domain (see checker_accepts).
IdentityReport run_check(IdentityId id, std::int64_t p, HurwitzCache& hurwitz);

/// Whether prime p is in the domain of the checker (p > 3 for the census
/// and proof-step checks, every prime otherwise).
bool checker_accepts(IdentityId id, std::int64_t p);

}  // namespace hcn
