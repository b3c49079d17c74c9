// twistchar: classify partitions, verify twisted character factorizations,
// scan partition ranges, compare core generating series.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "twistchar/report.hpp"
#include "twistchar/series.hpp"

using namespace twistchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitSampling = 3;

int default_jobs() {
  if (const char* env = std::getenv("TWISTCHAR_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring TWISTCHAR_JOBS=" << env << "\n";
  }
  return 1;
}

std::vector<Theorem> parse_theorems(const std::vector<std::string>& names) {
  std::vector<Theorem> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
      continue;
    }
    auto th = parse_theorem(name);
    if (!th) throw std::invalid_argument("unknown theorem '" + name + "'");
    out.push_back(*th);
  }
  return out;
}

SignRule sign_rule_or_throw(const std::string& name) {
  auto rule = parse_sign_rule(name);
  if (!rule) throw std::invalid_argument("sign rule must be simplified or expanded");
  return *rule;
}

struct Options {
  std::string literal;
  std::string theorem;
  int t = 2;
  int n = 1;
  std::uint64_t seed = 1;
  int trials = 1;
  std::string format = "text";
  std::string sign_rule = "simplified";

  std::vector<std::string> theorems{"all"};
  std::vector<int> ts{2};
  std::vector<int> ns{1};
  std::vector<std::uint64_t> seeds{1};
  int max_size = 8;
  int max_tn = 0;
  int jobs = 1;
  std::string out_path;

  int z = 0;
  int order = 30;
};

int cmd_classify(const Options& o) {
  const Partition lambda = Partition::parse(o.literal);
  if (lambda.length() > o.t * o.n)
    throw std::invalid_argument("length exceeds tn = " + std::to_string(o.t * o.n));
  if (o.format == "json") std::cout << classify_json(lambda, o.t, o.n).dump() << "\n";
  else std::cout << classify_text(lambda, o.t, o.n);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto th = parse_theorem(o.theorem);
  if (!th) throw std::invalid_argument("unknown theorem '" + o.theorem + "'");
  const Partition lambda = Partition::parse(o.literal);
  const auto report =
      verify(*th, lambda, o.t, o.n, o.seed, o.trials, sign_rule_or_throw(o.sign_rule));
  if (o.format == "json") std::cout << report_json(report).dump() << "\n";
  else std::cout << report_text(report);
  return report.match ? kExitOk : kExitMismatch;
}

int cmd_scan(const Options& o) {
  ScanConfig cfg;
  cfg.theorems = parse_theorems(o.theorems);
  cfg.ts = o.ts;
  cfg.ns = o.ns;
  cfg.max_size = o.max_size;
  cfg.max_tn = o.max_tn;
  cfg.seeds = o.seeds;
  cfg.trials = o.trials;
  cfg.sign_rule = sign_rule_or_throw(o.sign_rule);
  cfg.jobs = o.jobs;
  cfg.validate();

  std::unique_ptr<std::ofstream> file;
  if (!o.out_path.empty()) {
    file = std::make_unique<std::ofstream>(o.out_path);
    if (!*file) throw std::invalid_argument("cannot open " + o.out_path);
  }
  const bool json = o.format == "json";
  const auto summary = run_scan(cfg, [&](const ScanRecord& rec) {
    if (file) *file << record_json(rec).dump() << "\n";
    if (json) std::cout << record_json(rec).dump() << "\n";
    else std::cout << record_text(rec) << "\n";
  });
  if (json) std::cout << summary_json(summary).dump() << "\n";
  else std::cout << summary_text(summary) << "\n";
  if (summary.mismatches) return kExitMismatch;
  if (summary.sampling_failures) return kExitSampling;
  return kExitOk;
}

int cmd_series(const Options& o) {
  const int z = o.z, t = o.t, order = o.order;
  if (order < 0) throw std::invalid_argument("N must be nonnegative");
  if (t < 2) throw std::invalid_argument("need t >= 2");
  if (z < -1) throw std::invalid_argument("z-asymmetric cores are supported for z >= -1");

  const SeriesZ brute = size_series(enum_z_cores_brute(z, t, order), order);
  const SeriesZ lattice = size_series(enum_z_cores(z, t, order), order);
  std::optional<SeriesZ> product;
  if (z >= 0 && z <= t - 2) product = gf_z_cores(z, t, order);
  else if (z >= t - 1) product = SeriesZ::one(order);  // empty product: only the empty core
  else
    std::cerr << "note: the theta product is only defined for 0 <= z <= t-2; "
                 "z = -1 cores are listed as conjugates of the z = 1 cores\n";

  bool agree = true;
  std::cout << std::setw(4) << "m" << std::setw(10) << "enum" << std::setw(10) << "product"
            << std::setw(10) << "lattice" << "\n";
  for (int m = 0; m <= order; ++m) {
    const bool row_ok = brute[m] == lattice[m] && (!product || (*product)[m] == brute[m]);
    agree = agree && row_ok;
    std::cout << std::setw(4) << m << std::setw(10) << brute[m] << std::setw(10)
              << (product ? std::to_string((*product)[m]) : "-") << std::setw(10)
              << lattice[m] << (row_ok ? "" : "  <-- mismatch") << "\n";
  }
  std::cout << (agree ? "all columns agree" : "MISMATCH") << "\n";
  return agree ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted classical character factorizations over cyclotomic fields"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_jobs();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "core, quotient and core classes of a partition");
  classify->add_option("partition", o.literal, "comma-separated parts, \"\" for the empty partition")
      ->required();
  classify->add_option("--t", o.t, "modulus")->check(CLI::Range(2, 1 << 20));
  classify->add_option("--n", o.n, "padding multiplier")->check(CLI::Range(1, 1 << 20));
  add_format(classify);

  auto* verify_cmd = app.add_subcommand("verify", "check one factorization at sampled points");
  verify_cmd->add_option("theorem", o.theorem, "schurfac, schur1, sympfact, eorthfact, oorthfact")
      ->required();
  verify_cmd->add_option("partition", o.literal, "comma-separated parts")->required();
  verify_cmd->add_option("--t", o.t)->check(CLI::Range(2, 1 << 20));
  verify_cmd->add_option("--n", o.n)->check(CLI::Range(1, 1 << 20));
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--sign-rule", o.sign_rule, "simplified or expanded");
  add_format(verify_cmd);

  auto* scan = app.add_subcommand("scan", "verify every partition in a range");
  scan->add_option("--theorems", o.theorems, "comma list or 'all'")->delimiter(',');
  scan->add_option("--t", o.ts, "comma list of t")->delimiter(',');
  scan->add_option("--n", o.ns, "comma list of n")->delimiter(',');
  scan->add_option("--max-size", o.max_size, "largest |lambda|");
  scan->add_option("--max-tn", o.max_tn, "skip (t, n) with tn above this");
  scan->add_option("--seeds", o.seeds, "comma list of seeds")->delimiter(',');
  scan->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  scan->add_option("--jobs", o.jobs, "worker threads (default $TWISTCHAR_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  scan->add_option("--sign-rule", o.sign_rule, "simplified or expanded");
  scan->add_option("--out", o.out_path, "also write JSON records here");
  add_format(scan);

  auto* series = app.add_subcommand("series", "z-asymmetric t-core counts three ways");
  series->add_option("--z", o.z);
  series->add_option("--t", o.t);
  series->add_option("--N", o.order, "truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*scan) return cmd_scan(o);
    if (*series) return cmd_series(o);
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSampling;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
