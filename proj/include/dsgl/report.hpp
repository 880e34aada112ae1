#pragma once

// Scenario reports, JSON output and the case runner.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dsgl/dsfunctor.hpp"

namespace dsgl {

struct CaseResult {
  std::string key;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

struct ScenarioReport {
  std::string scenario;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<CaseResult> cases;
  long wall_time_ms = 0;

  bool ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return verdict_ok(c.verdict); });
  }
  long count(Verdict v) const {
    return std::count_if(cases.begin(), cases.end(), [v](const CaseResult& c) { return c.verdict == v; });
  }
  void sort_cases() {
    std::stable_sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  }
  void append(const ScenarioReport& o) { cases.insert(cases.end(), o.cases.begin(), o.cases.end()); }
};

inline nlohmann::ordered_json to_json(const ScenarioReport& r, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario;
  j["params"] = r.params;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases)
    j["cases"].push_back({{"key", c.key}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

inline nlohmann::ordered_json to_json(const DSResult& r) {
  nlohmann::ordered_json j;
  j["alpha"] = r.alpha().str();
  const Region& v = r.valid_region();
  j["valid_region"] = {{"top", v.top.str()}, {"depth", v.depth}};
  j["weights"] = nlohmann::ordered_json::array();
  for (const auto& [mu, sp] : r.spaces()) {
    if (!r.valid(mu) || sp.dim() == 0) continue;
    Dims d = r.dims(mu);
    j["weights"].push_back({{"weight", mu.str()}, {"even", d.even}, {"odd", d.odd}});
  }
  j["total_dim"] = r.total_dim();
  return j;
}

/// Worker count: DSGL_THREADS if set, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("DSGL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Runs job(k) for k < count on a small pool; results land at index k.
inline std::vector<CaseResult> run_cases(std::size_t count, const std::function<CaseResult(std::size_t)>& job) {
  std::vector<CaseResult> out(count);
  auto guarded = [&](std::size_t k) {
    try {
      out[k] = job(k);
    } catch (const std::exception& e) {
      out[k].key = "case " + std::to_string(k);
      out[k].verdict = Verdict::Fail;
      out[k].detail = std::string("exception: ") + e.what();
    }
  };
  unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) guarded(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) guarded(k);
    });
  for (auto& t : pool) t.join();
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace dsgl
