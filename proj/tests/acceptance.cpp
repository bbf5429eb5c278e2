// Copyright 2026 The Spectrum Auction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "spectrum/allocation.hpp"
#include "spectrum/csv_io.hpp"
#include "spectrum/experiments.hpp"
#include "spectrum/instances.hpp"
#include "support/test_support.hpp"

namespace {

using namespace spectrum;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

constexpr std::uint64_t kPropertySeed = 20260415;
constexpr int kPropertyInstances = 1000;

std::vector<testing::RandomInstance> property_instances(int count) {
  std::mt19937_64 rng(kPropertySeed);
  std::vector<testing::RandomInstance> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(testing::random_instance(rng, 12, 10, 30, 100000));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ResultRow* find_row(const std::vector<ResultRow>& rows, Policy p, std::int64_t param) {
  for (const auto& r : rows) {
    if (r.policy == p && r.param == param) return &r;
  }
  return nullptr;
}

Outcome oracle_equivalence() {
  Outcome v;
  const auto start = Clock::now();
  const auto instances = property_instances(kPropertyInstances);
  for (std::size_t i = 0; i < instances.size() && v.ok; ++i) {
    const auto& inst = instances[i];
    const ChannelPool pool{inst.m};
    const Money dp = dp_allocate(inst.bids, pool).total_gain;
    const Money oracle = oracle_allocate(inst.bids, pool).total_gain;
    v.require(dp == oracle, "instance " + std::to_string(i) + ": dp " + dp.to_string() +
                                " != oracle " + oracle.to_string());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  v.require(secs < 30.0, "took " + std::to_string(secs) + " s");
  if (v.ok) {
    v.detail = std::to_string(kPropertyInstances) + " instances in " +
               std::to_string(secs) + " s";
  }
  return v;
}

Outcome dominance() {
  Outcome v;
  const auto instances = property_instances(kPropertyInstances);
  for (std::size_t i = 0; i < instances.size() && v.ok; ++i) {
    const auto& inst = instances[i];
    const ChannelPool pool{inst.m};
    const Money dp = dp_allocate(inst.bids, pool).total_gain;
    v.require(dp >= greedy_allocate(inst.bids, pool).total_gain,
              "greedy beats dp on instance " + std::to_string(i));
    v.require(dp >= fifo_allocate(inst.bids, pool).total_gain,
              "fifo beats dp on instance " + std::to_string(i));
  }
  if (v.ok) v.detail = std::to_string(kPropertyInstances) + " instances";
  return v;
}

Outcome satisfaction_trend() {
  Outcome v;
  const auto spec = SweepSpec::defaults_for(Figure::kSatisfiedVsChannels);
  const auto rows = run_sweep(spec);
  for (std::int64_t m = 1; m <= 10; ++m) {
    const auto* dp = find_row(rows, Policy::kDpSealed, m);
    const auto* greedy = find_row(rows, Policy::kGreedySealed, m);
    const auto* fifo = find_row(rows, Policy::kFifo, m);
    v.require(dp && greedy && fifo, "missing row for m=" + std::to_string(m));
    if (!v.ok) return v;
    v.require(*dp->satisfied >= *greedy->satisfied && *dp->satisfied >= *fifo->satisfied,
              "dp satisfies fewer at m=" + std::to_string(m));
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  v.require(csv.str() == read_file(std::string(SPECTRUM_GOLDEN_DIR) + "/fig6.csv"),
            "sweep output differs from golden fig6.csv");
  if (v.ok) v.detail = "m=1..10, golden match";
  return v;
}

Outcome gain_trend() {
  Outcome v;
  const auto rows = run_sweep(SweepSpec::defaults_for(Figure::kGainVsChannels));
  for (std::int64_t m = 1; m <= 10; ++m) {
    const auto* dp = find_row(rows, Policy::kDpSealed, m);
    const auto* greedy = find_row(rows, Policy::kGreedySealed, m);
    const auto* fifo = find_row(rows, Policy::kFifo, m);
    v.require(dp && greedy && fifo, "missing row for m=" + std::to_string(m));
    if (!v.ok) return v;
    v.require(*dp->total_gain >= *greedy->total_gain && *dp->total_gain >= *fifo->total_gain,
              "dp earns less at m=" + std::to_string(m));
  }
  const auto gain_at_5 = [&](Policy p) { return find_row(rows, p, 5)->total_gain->cents(); };
  v.require(gain_at_5(Policy::kDpSealed) == 69800, "dp(m=5) != 698.00");
  v.require(gain_at_5(Policy::kGreedySealed) == 63000, "greedy(m=5) != 630.00");
  v.require(gain_at_5(Policy::kFifo) == 49500, "fifo(m=5) != 495.00");
  if (v.ok) v.detail = "m=1..10, m=5: 698.00 / 630.00 / 495.00";
  return v;
}

Outcome response_times() {
  Outcome v;
  const auto start = Clock::now();
  const auto rows = run_sweep(SweepSpec::defaults_for(Figure::kResponseVsInterval));
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  for (const auto& r : rows) {
    const std::int64_t x = r.param;
    std::int64_t expected = -1;
    if (*r.su_id == 1) expected = 9 * x + 1;
    if (*r.su_id == 5) expected = 5 * x + 1;
    if (*r.su_id == 10) expected = 1;
    if (expected < 0) continue;
    v.require(*r.response_time == std::chrono::seconds{expected},
              std::string(policy_name(r.policy)) + " X=" + std::to_string(x) + " SU" +
                  std::to_string(*r.su_id) + ": got " + format_seconds(*r.response_time));
  }
  std::size_t checked = 0;
  for (std::int64_t x = 1; x <= 10; ++x) {
    for (const auto& r : rows) {
      if (r.param == x && (*r.su_id == 1 || *r.su_id == 5 || *r.su_id == 10)) ++checked;
    }
  }
  v.require(checked == 2 * 10 * 3, "expected 60 checked rows, got " + std::to_string(checked));
  v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (v.ok) v.detail = "X=1..10 exact, " + std::to_string(secs) + " s";
  return v;
}

Outcome processing_slope() {
  Outcome v;
  const auto spec = SweepSpec::defaults_for(Figure::kProcessingVsPopulation);
  v.require(spec.repeats >= 1000, "repeats below 1000");
  v.require(spec.fixed_channels == 5, "m is not 5");
  const auto rows = run_sweep(spec);
  std::vector<double> nb;
  std::vector<double> ns;
  for (Policy p : kAllPolicies) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      const auto* r = find_row(rows, p, n);
      v.require(r && r->mean_processing, "missing duration for " + std::string(policy_name(p)) +
                                             " nb=" + std::to_string(n));
      if (!v.ok) return v;
      const double d = static_cast<double>(r->mean_processing->count());
      v.require(std::isfinite(d) && d >= 0, "non-finite duration");
      if (p == Policy::kDpSealed) {
        nb.push_back(static_cast<double>(n));
        ns.push_back(d);
      }
    }
  }
  const double slope = least_squares_slope(nb, ns);
  v.require(slope >= 0.0, "dp slope " + std::to_string(slope) + " ns per bid");
  if (v.ok) v.detail = "dp slope " + std::to_string(slope) + " ns per bid";
  return v;
}

Outcome scale_invariance() {
  Outcome v;
  const auto instances = property_instances(200);
  for (std::size_t i = 0; i < instances.size() && v.ok; ++i) {
    const auto& inst = instances[i];
    const ChannelPool pool{inst.m};
    const auto base = dp_allocate(inst.bids, pool);
    for (std::int64_t k : {2, 10, 1000}) {
      auto scaled = inst.bids;
      for (Bid& b : scaled) b.price = b.price.scaled_by(k);
      const auto out = dp_allocate(scaled, pool);
      v.require(out.total_gain == base.total_gain.scaled_by(k),
                "gain not scaled by " + std::to_string(k) + " on instance " + std::to_string(i));
      v.require(out.winners == base.winners,
                "winners changed under k=" + std::to_string(k) + " on instance " +
                    std::to_string(i));
    }
  }
  if (v.ok) v.detail = "200 instances, k in {2, 10, 1000}";
  return v;
}

Outcome determinism() {
  Outcome v;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "spectrum_acceptance";
  fs::create_directories(dir);
  const std::string bids = (dir / "bids.csv").string();
  {
    std::ofstream out(bids);
    write_bid_file(out, gain_dataset());
  }
  const std::vector<std::vector<std::string>> commands = {
      {"run", "--policy", "dp", "--channels", "5", "--bids", bids},
      {"run", "--policy", "greedy", "--channels", "5", "--bids", bids},
      {"run", "--policy", "fifo", "--channels", "5", "--bids", bids},
      {"sweep", "--figure", "6"},
      {"sweep", "--figure", "7"},
      {"sweep", "--figure", "9"},
  };
  for (const auto& args : commands) {
    std::string first;
    for (int rep = 0; rep < 3 && v.ok; ++rep) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run_cli(args, out, err);
      v.require(code == cli::kSuccess, args[0] + " exited " + std::to_string(code) + ": " +
                                           err.str());
      if (rep == 0) {
        first = out.str();
      } else {
        v.require(out.str() == first, args[0] + " output differs between runs");
      }
    }
  }
  fs::remove_all(dir);
  if (v.ok) v.detail = "3 runs x 3 policies, sweeps 6/7/9, 3 repeats each";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 oracle equivalence", oracle_equivalence},
      {"AC2 dominance", dominance},
      {"AC3 satisfied-count trend", satisfaction_trend},
      {"AC4 gain trend", gain_trend},
      {"AC5 response times", response_times},
      {"AC6 processing slope", processing_slope},
      {"AC7 scale invariance", scale_invariance},
      {"AC8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << name << " (" << v.detail << ")\n";
    if (!v.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
