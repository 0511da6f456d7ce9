// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All comparisons are exact integer equalities on
// twelfths; the time limits are the stated runtime targets.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hcn/driver.hpp"
#include "hcn/identities.hpp"
#include "hcn/qforms.hpp"
#include "hcn/report.hpp"
#include "oracles.hpp"

using namespace hcn;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  auto all = primes_up_to(hi);
  std::erase_if(all, [lo](std::int64_t p) { return p < lo; });
  return all;
}

std::string csv_of(const std::vector<IdentityReport>& records) {
  std::ostringstream os;
  emit_csv(records, os);
  return os.str();
}

Twelfth wrong_on_3_mod_4(std::int64_t d) {
  if (d < 0 && ((d % 4) + 4) % 4 == 3) return Twelfth::whole(1);
  return weighted_class_number(d);
}

}  // namespace

int main() {
  const auto primes = first_primes(kReproductionPrimeCount);

  // 1. Theorem 1 on the first 10,000 primes, one worker and eight workers.
  std::string csv_single, csv_parallel;
  {
    const bool range_ok = primes.size() == 10000 && primes.back() == 104729;
    auto t0 = Clock::now();
    const auto single = verify_primes(IdentityId::theorem1, primes, 1);
    const double t_single = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = verify_primes(IdentityId::theorem1, primes, 8);
    const double t_parallel = seconds_since(t0);
    const Tally ts = tally(single), tp = tally(parallel);
    csv_single = csv_of(single);
    csv_parallel = csv_of(parallel);
    const bool ok = range_ok && ts.failures == 0 && ts.passes == 10000 && tp.failures == 0 && t_single <= 600.0 &&
                    t_parallel <= 120.0;
    report(1, ok, "3 * sum_{t^2<p} H_w(t^2-p) = p-2 for all primes p < 104730",
           std::to_string(ts.passes) + " pass, " + std::to_string(ts.failures) + " fail; 1 worker " +
               fmt_seconds(t_single) + " <= 600s, 8 workers " + fmt_seconds(t_parallel) + " <= 120s");
  }

  // 2. Worked example at p = 5.
  {
    HurwitzCache cache;
    const auto terms = theorem1_terms(5, cache);
    const std::int64_t expected_t[] = {-2, -1, 0, 1, 2};
    const std::int64_t expected_v[] = {0, 6, 0, 6, 0};
    bool ok = terms.size() == 5;
    std::string vec;
    for (std::size_t i = 0; ok && i < 5; ++i) {
      ok = terms[i].t == expected_t[i] && terms[i].value.twelfths() == expected_v[i];
      vec += (i ? ", " : "") + terms[i].value.to_string();
    }
    ok = ok && theorem1_sum(5) == Twelfth::whole(1);
    report(2, ok, "theorem1_sum(5) = 1 with terms (0, 1/2, 0, 1/2, 0)", "terms (" + vec + ")");
  }

  // 3. Classical identity for p < 10^4.
  {
    const auto t0 = Clock::now();
    const auto records = verify_primes(IdentityId::classical2p, primes_up_to(9999), 1);
    const double t = seconds_since(t0);
    const Tally tl = tally(records);
    report(3, tl.failures == 0 && records.size() == 1229 && t <= 300.0,
           "sum_{t^2<4p} H_w(t^2-4p) = 2p for all primes p < 10^4",
           std::to_string(tl.passes) + " pass, " + std::to_string(tl.failures) + " fail, " + fmt_seconds(t) +
               " <= 300s");
  }

  const auto census_primes = primes_in(5, 300);

  // 4. Lemma 1 census and mass formula for 5 <= p <= 300.
  {
    const auto t0 = Clock::now();
    const Tally lemma = tally(verify_primes(IdentityId::lemma1_census, census_primes, 1));
    const Tally mass = tally(verify_primes(IdentityId::mass_formula, census_primes, 1));
    const double t = seconds_since(t0);
    report(4, lemma.failures == 0 && mass.failures == 0 && lemma.passes == census_primes.size() && t <= 120.0,
           "census = 3(p-1) H_w((t^2-4p)/4) at every trace and sum = (p-1)(p-2), 5 <= p <= 300",
           std::to_string(lemma.passes) + " census pass, " + std::to_string(mass.passes) + " mass pass, " +
               fmt_seconds(t) + " <= 120s");
  }

  // 5. Reindexing and term-wise vanishing for 5 <= p <= 300.
  {
    const Tally re = tally(verify_primes(IdentityId::reindex, census_primes, 1));
    const Tally va = tally(verify_primes(IdentityId::vanishing, census_primes, 1));
    report(5, re.failures == 0 && va.failures == 0 && re.passes == census_primes.size(),
           "reindex chains and term-wise vanishing, 5 <= p <= 300",
           std::to_string(re.passes) + " reindex pass, " + std::to_string(va.passes) + " vanishing pass");
  }

  // 6. Class numbers against the reduction-algorithm oracle.
  {
    std::size_t checked = 0, mismatched = 0;
    for (std::int64_t d = -2000; d <= -3; ++d) {
      if (!is_negative_discriminant(d)) continue;
      ++checked;
      if (class_number(d) != oracle::class_number_by_reduction(d)) ++mismatched;
    }
    const bool anchors = class_number(-3) == 1 && class_number(-4) == 1 && class_number(-23) == 3;
    report(6, mismatched == 0 && checked == 1000 && anchors, "class_number = reduction oracle on [-2000, -3]",
           std::to_string(checked) + " discriminants, " + std::to_string(mismatched) +
               " mismatches; h(-3)=1 h(-4)=1 h(-23)=3 " + (anchors ? "ok" : "WRONG"));
  }

  // 7. Determinism across worker counts and sensitivity to a wrong h_w.
  {
    const auto mutated = verify_primes(IdentityId::theorem1, primes, 8, &wrong_on_3_mod_4);
    const Tally tm = tally(mutated);
    const bool first_fails = !mutated.empty() && mutated.front().prime == 2 && !mutated.front().pass;

    RunConfig cfg;
    cfg.identity = IdentityId::theorem1;
    cfg.max_p = 2000;
    cfg.format = OutputFormat::json;
    cfg.weight_rule = &wrong_on_3_mod_4;
    std::ostringstream out, err;
    const int exit_code = run(cfg, out, err);

    const bool identical = !csv_single.empty() && csv_single == csv_parallel;
    report(7, identical && first_fails && tm.failures > 0 && exit_code == kExitFailure,
           "byte-identical reports across worker counts; wrong h_w convention detected",
           std::string("1 vs 8 workers ") + (identical ? "identical" : "DIFFER") + "; mutated rule: " +
               std::to_string(tm.failures) + " failures, first failing p = " +
               (first_fails ? "2" : "none") + ", exit " + std::to_string(exit_code));
  }

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
