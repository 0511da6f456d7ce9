#include "hcn/hurwitz.hpp"

#include "hcn/exactmath.hpp"

namespace hcn {

Twelfth hurwitz_class_number(std::int64_t D) { return hurwitz_class_number(D, &weighted_class_number); }

Twelfth hurwitz_class_number(std::int64_t D, WeightRule rule) {
  if (D == 0) return Twelfth::from_twelfths(-1);
  if (D > 0) return Twelfth{};
  Twelfth sum;
  for (std::int64_t f : square_divisors(D)) sum += rule(D / (f * f));
  return sum;
}

Twelfth HurwitzCache::operator()(std::int64_t D) {
  if (D >= 0) return hurwitz_class_number(D, rule_);
  if (auto it = entries_.find(D); it != entries_.end()) return it->second;
  const Twelfth v = hurwitz_class_number(D, rule_);
  entries_.emplace(D, v);
  return v;
}

}  // namespace hcn
