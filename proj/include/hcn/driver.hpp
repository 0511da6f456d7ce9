#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hcn/hurwitz.hpp"
#include "hcn/identities.hpp"

namespace hcn {

enum class Command { hurwitz, classnum, weighted_classnum, point_count, census, verify };
enum class OutputFormat { table, csv, json };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// The 10,000th prime is 104729, so this bound and `--first-n-primes 10000`
/// select the same set.
inline constexpr std::int64_t kReproductionPrimeCount = 10000;

struct RunConfig {
  Command command = Command::verify;
  /// Integer operands of the single-value commands, in order.
  std::vector<std::int64_t> operands;
  IdentityId identity = IdentityId::theorem1;
  /// Primes p <= max_p.
  std::optional<std::int64_t> max_p;
  /// The first n primes.
  std::optional<std::int64_t> first_n_primes;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::table;
  std::optional<std::filesystem::path> output_path;
  /// h_w convention used by every checker; replaced only in fault-injection tests.
  WeightRule weight_rule = &weighted_class_number;
};

/// All primes p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
/// The first n primes, ascending.
std::vector<std::int64_t> first_primes(std::int64_t n);

/// The primes a verify run covers: the selected set filtered to the
/// checker's domain. With no selection this is the first 10,000 primes.
/// Throws std::invalid_argument when both selectors are set or either is
/// non-positive.
std::vector<std::int64_t> select_primes(const RunConfig& config);

/// Runs the checker at every prime across `workers` threads (one private
/// HurwitzCache each). The result is ordered like `primes` regardless of
/// scheduling.
std::vector<IdentityReport> verify_primes(IdentityId id, std::span<const std::int64_t> primes,
                                          unsigned workers,
                                          WeightRule rule = &weighted_class_number);

/// Executes a parsed configuration. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcn
