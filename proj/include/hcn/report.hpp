#pragma once

#include <cstddef>
#include <ostream>
#include <span>

#include "hcn/identities.hpp"

namespace hcn {

struct Tally {
  std::size_t passes = 0;
  std::size_t failures = 0;
};

Tally tally(std::span<const IdentityReport> records);

/// Header `p,identity,lhs_twelfths,rhs_twelfths,pass`, then one row per record.
void emit_csv(std::span<const IdentityReport> records, std::ostream& out);

/// A JSON array: one object per record, then a summary object with totals.
void emit_json(std::span<const IdentityReport> records, std::ostream& out);

/// Aligned human-readable table with values in lowest terms.
void emit_table(std::span<const IdentityReport> records, std::ostream& out);

/// One-line pass/fail tally, e.g. `summary: 10000 passed, 0 failed`.
void emit_summary(const Tally& t, std::ostream& out);

}  // namespace hcn
