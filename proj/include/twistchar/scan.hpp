#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistchar/factorization.hpp"

namespace twistchar {

struct ScanConfig {
  std::vector<Theorem> theorems;
  std::vector<int> ts;
  std::vector<int> ns;
  int max_size = 0;          // B: |lambda| <= B
  int max_tn = 0;            // skip (t, n) with tn above this; 0 = no cap
  std::vector<std::uint64_t> seeds{1};
  int trials = 1;
  SignRule sign_rule = SignRule::Simplified;
  int jobs = 1;

  /// Throws std::invalid_argument on an empty or out-of-range field.
  void validate() const;
};

struct ScanCase {
  Theorem theorem;
  Partition lambda;
  int t;
  int n;
  std::uint64_t seed;
};

struct ScanRecord {
  ScanCase scan_case;
  std::optional<VerificationReport> report;
  std::string error;  // sampling failure message when report is empty
};

struct ScanSummary {
  std::int64_t cases = 0;
  std::int64_t matches = 0;
  std::int64_t mismatches = 0;
  std::int64_t vanish_confirmed = 0;
  std::int64_t sampling_failures = 0;

  bool clean() const { return mismatches == 0 && sampling_failures == 0; }
};

/// Canonical order: theorem, t, n, lambda by (size, lex), seed.
std::vector<ScanCase> scan_cases(const ScanConfig& config);

/// Runs every case on `config.jobs` workers and hands records to `emit` in
/// canonical order, from the calling thread.
ScanSummary run_scan(const ScanConfig& config,
                     const std::function<void(const ScanRecord&)>& emit);

ScanRecord run_case(const ScanCase& c, int trials, SignRule rule);

}  // namespace twistchar
