#pragma once

#include <cstdint>
#include <unordered_map>

#include "hcn/qforms.hpp"
#include "hcn/twelfth.hpp"

namespace hcn {

/// A weighted class number convention d -> h_w(d). The genuine one is
/// weighted_class_number; others exist only to exercise the verifiers.
using WeightRule = Twelfth (*)(std::int64_t);

/// Kronecker-Hurwitz class number H_w(D).
///
/// For D < 0 this is the sum of h_w(D / f^2) over every f >= 1 with f^2 | D.
/// The function is extended to all integers: H_w(0) = -1/12 and H_w(D) = 0
/// for D > 0. Both extensions are only reached by callers summing over
/// ranges that touch D >= 0.
Twelfth hurwitz_class_number(std::int64_t D);
Twelfth hurwitz_class_number(std::int64_t D, WeightRule rule);

/// Memoized H_w for batch sweeps. Not thread-safe: use one per worker.
class HurwitzCache {
 public:
  explicit HurwitzCache(WeightRule rule = &weighted_class_number) : rule_(rule) {}

  Twelfth operator()(std::int64_t D);

  WeightRule rule() const { return rule_; }
  std::size_t size() const { return entries_.size(); }
  void clear() { entries_.clear(); }

 private:
  WeightRule rule_;
  std::unordered_map<std::int64_t, Twelfth> entries_;
};

}  // namespace hcn
