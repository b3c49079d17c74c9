#include "twistchar/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace twistchar {

void ScanConfig::validate() const {
  if (theorems.empty()) throw std::invalid_argument("no theorems selected");
  if (ts.empty() || ns.empty()) throw std::invalid_argument("empty t or n range");
  for (int t : ts)
    if (t < 2) throw std::invalid_argument("every t must be at least 2");
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("every n must be at least 1");
  if (max_size < 0) throw std::invalid_argument("max size must be nonnegative");
  if (max_tn < 0) throw std::invalid_argument("tn cap must be nonnegative");
  if (seeds.empty()) throw std::invalid_argument("no seeds");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

std::vector<ScanCase> scan_cases(const ScanConfig& config) {
  config.validate();
  std::vector<ScanCase> cases;
  for (Theorem th : config.theorems)
    for (int t : config.ts)
      for (int n : config.ns) {
        if (config.max_tn > 0 && t * n > config.max_tn) continue;
        for (const auto& lambda : partitions_up_to(config.max_size, length_bound(th, t, n)))
          for (auto seed : config.seeds) cases.push_back({th, lambda, t, n, seed});
      }
  return cases;
}

ScanRecord run_case(const ScanCase& c, int trials, SignRule rule) {
  ScanRecord rec{c, std::nullopt, {}};
  try {
    rec.report = verify(c.theorem, c.lambda, c.t, c.n, c.seed, trials, rule);
  } catch (const SamplingError& e) {
    rec.error = e.what();
  }
  return rec;
}

ScanSummary run_scan(const ScanConfig& config,
                     const std::function<void(const ScanRecord&)>& emit) {
  const auto cases = scan_cases(config);
  ScanSummary summary;

  std::mutex mu;
  std::condition_variable ready;
  std::map<std::size_t, ScanRecord> done;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      std::optional<ScanRecord> rec;
      try {
        rec = run_case(cases[i], config.trials, config.sign_rule);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = cases.size();
        ready.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done.emplace(i, std::move(*rec));
      ready.notify_all();
    }
  };

  const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(cases.size())));
  std::vector<std::jthread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t i = 0; i < cases.size(); ++i) {
    ScanRecord rec;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done.count(i) || failure; });
      if (failure) break;
      rec = std::move(done.at(i));
      done.erase(i);
    }
    ++summary.cases;
    if (!rec.report) {
      ++summary.sampling_failures;
    } else if (rec.report->match) {
      ++summary.matches;
      if (rec.report->vanishing_confirmed()) ++summary.vanish_confirmed;
    } else {
      ++summary.mismatches;
    }
    emit(rec);
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace twistchar
