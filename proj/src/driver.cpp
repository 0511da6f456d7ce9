#include "hcn/driver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "hcn/montgomery.hpp"
#include "hcn/qforms.hpp"
#include "hcn/report.hpp"

namespace hcn {

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::vector<std::int64_t> first_primes(std::int64_t n) {
  if (n <= 0) return {};
  std::int64_t bound = 64;
  for (;;) {
    auto primes = primes_up_to(bound);
    if (static_cast<std::int64_t>(primes.size()) >= n) {
      primes.resize(static_cast<std::size_t>(n));
      return primes;
    }
    bound *= 2;
  }
}

std::vector<std::int64_t> select_primes(const RunConfig& config) {
  if (config.max_p && config.first_n_primes)
    throw std::invalid_argument("--max-p and --first-n-primes are mutually exclusive");
  std::vector<std::int64_t> primes;
  if (config.max_p) {
    if (*config.max_p < 1) throw std::invalid_argument("--max-p must be positive");
    primes = primes_up_to(*config.max_p);
  } else {
    const std::int64_t n = config.first_n_primes.value_or(kReproductionPrimeCount);
    if (n < 1) throw std::invalid_argument("--first-n-primes must be positive");
    primes = first_primes(n);
  }
  std::erase_if(primes, [&](std::int64_t p) { return !checker_accepts(config.identity, p); });
  return primes;
}

std::vector<IdentityReport> verify_primes(IdentityId id, std::span<const std::int64_t> primes,
                                          unsigned workers, WeightRule rule) {
  std::vector<IdentityReport> results(primes.size());
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    HurwitzCache cache(rule);
    try {
      for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < primes.size();)
        results[i] = run_check(id, primes[i], cache);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(primes.size());
    }
  };

  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

namespace {

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto primes = select_primes(config);
  const auto records = verify_primes(config.identity, primes, config.workers, config.weight_rule);
  const Tally t = tally(records);

  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.output_path->string() << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = config.output_path ? static_cast<std::ostream&>(file) : out;
  switch (config.format) {
    case OutputFormat::table:
      emit_table(records, sink);
      break;
    case OutputFormat::csv:
      emit_csv(records, sink);
      break;
    case OutputFormat::json:
      emit_json(records, sink);
      break;
  }
  if (config.output_path) {
    file.flush();
    if (!file) {
      err << "error: failed writing " << config.output_path->string() << "\n";
      return kExitUsage;
    }
  }
  // Keep machine-readable stdout free of the tally.
  const bool clean_stdout = !config.output_path && config.format != OutputFormat::table;
  emit_summary(t, clean_stdout ? err : (config.format == OutputFormat::table ? sink : out));
  return t.failures == 0 ? kExitPass : kExitFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& args = config.operands;
    auto arity = [&](std::size_t n) {
      if (args.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " integer operand(s)");
    };
    switch (config.command) {
      case Command::hurwitz:
        arity(1);
        out << hurwitz_class_number(args[0], config.weight_rule) << '\n';
        return kExitPass;
      case Command::classnum:
        arity(1);
        out << class_number(args[0]) << '\n';
        return kExitPass;
      case Command::weighted_classnum:
        arity(1);
        out << config.weight_rule(args[0]) << '\n';
        return kExitPass;
      case Command::point_count:
        arity(3);
        out << point_count(CurveParams{args[0], args[1], args[2]}) << '\n';
        return kExitPass;
      case Command::census:
        arity(1);
        for (const auto& [t, n] : trace_census(args[0]).counts) out << t << ' ' << n << '\n';
        return kExitPass;
      case Command::verify:
        if (config.workers < 1) throw std::invalid_argument("--workers must be at least 1");
        return run_verify(config, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz class numbers, Montgomery trace censuses and identity verification", "hcn"};
  app.require_subcommand(1);

  RunConfig config;
  std::int64_t value = 0;

  auto single = [&](const char* name, const char* help, Command cmd, const char* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(what, value, "integer argument")->required()->allow_extra_args(false);
    sub->callback([&config, &value, cmd] {
      config.command = cmd;
      config.operands = {value};
    });
  };
  single("hurwitz", "Print H_w(D)", Command::hurwitz, "D");
  single("classnum", "Print h(d) for d < 0, d = 0,1 mod 4", Command::classnum, "d");
  single("weighted-classnum", "Print h_w(d)", Command::weighted_classnum, "d");
  single("census", "Print the Montgomery trace census 't count' for a prime p > 3", Command::census, "p");

  std::int64_t cp = 0, ca = 0, cb = 0;
  auto* pc = app.add_subcommand("point-count", "Print #M_{A,B}(F_p)");
  pc->add_option("p", cp)->required();
  pc->add_option("A", ca)->required();
  pc->add_option("B", cb)->required();
  pc->callback([&] {
    config.command = Command::point_count;
    config.operands = {cp, ca, cb};
  });

  std::string identity;
  std::string format = "table";
  std::int64_t max_p = 0, first_n = 0;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Check an identity over a range of primes");
  verify->add_option("identity", identity, "theorem1 | classical | lemma1 | reindex | vanishing")
      ->required()
      ->check(CLI::IsMember({"theorem1", "classical", "lemma1", "reindex", "vanishing"}));
  auto* max_opt = verify->add_option("--max-p", max_p, "Check every prime p <= N");
  auto* first_opt = verify->add_option("--first-n-primes", first_n, "Check the first K primes (default 10000)");
  max_opt->excludes(first_opt);
  verify->add_option("--workers,-j", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  auto* out_opt = verify->add_option("--out", out_path, "Write the report to PATH");
  verify->callback([&] {
    config.command = Command::verify;
    config.identity = *parse_identity(identity);
    if (max_opt->count() > 0) config.max_p = max_p;
    if (first_opt->count() > 0) config.first_n_primes = first_n;
    if (out_opt->count() > 0) config.output_path = out_path;
    config.format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::table;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace hcn
