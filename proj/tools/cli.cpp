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


#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "spectrum/csv_io.hpp"
#include "spectrum/errors.hpp"
#include "spectrum/experiments.hpp"
#include "spectrum/sim.hpp"

namespace spectrum::cli {

namespace {

struct RunOptions {
  std::string policy;
  std::int64_t channels = 0;
  std::string bids_path;
  std::int64_t interval_s = 1;
  std::int64_t delay_s = 1;
  std::string transcript_path;
  std::string events_path;
};

struct SweepOptions {
  int figure = 0;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> repeats;
};

// Writes `text` to `path` in one go; throws ValidationError if the file
// cannot be opened or written.
void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw ValidationError("failed writing '" + path + "'");
}

int cmd_run(const RunOptions& opt, std::ostream& out) {
  const Policy policy = parse_policy(opt.policy);
  const ChannelPool pool{opt.channels};
  const std::vector<Bid> bids = read_bid_file(opt.bids_path);

  SimConfig config;
  config.nb = bids.size();
  config.channels = pool.free_channels();
  config.arrival_interval = std::chrono::seconds{opt.interval_s};
  config.pu_launch_delay = std::chrono::seconds{opt.delay_s};
  config.policy = policy;
  std::vector<Demand> demands;
  for (const Bid& b : bids) demands.push_back({b.su_id, b.channels, b.price});
  config.demands = std::move(demands);

  const SimReport report = run_simulation(config);

  if (!opt.transcript_path.empty()) {
    std::ostringstream csv;
    write_transcript_csv(csv, report.transcript);
    write_file(opt.transcript_path, csv.str());
  }
  if (!opt.events_path.empty()) {
    std::ostringstream csv;
    write_event_log_csv(csv, report.event_log);
    write_file(opt.events_path, csv.str());
  }
  write_outcome_csv(out, bids, report.outcome, policy, pool);
  return kSuccess;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
  SweepSpec spec = SweepSpec::defaults_for(parse_figure(opt.figure));
  if (opt.seed) spec.seed = *opt.seed;
  if (opt.repeats) spec.repeats = *opt.repeats;

  std::ostringstream csv;
  write_sweep_csv(csv, run_sweep(spec));
  if (opt.out_path.empty()) {
    out << csv.str();
  } else {
    write_file(opt.out_path, csv.str());
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sealed-bid spectrum allocation: FIFO', greedy and DP knapsack"};
  app.require_subcommand(1);

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "Allocate one bid file and print verdicts");
  run_cmd->add_option("--policy", run.policy, "dp | greedy | fifo")
      ->required()
      ->check(CLI::IsMember({"dp", "greedy", "fifo"}));
  run_cmd->add_option("--channels", run.channels, "Free PU channels (m)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--bids", run.bids_path, "CSV with header su_id,channels,price")
      ->required();
  run_cmd->add_option("--interval", run.interval_s, "Seconds between SU arrivals")
      ->capture_default_str();
  run_cmd->add_option("--delay", run.delay_s, "Seconds from last arrival to PU launch")
      ->capture_default_str();
  run_cmd->add_option("--transcript", run.transcript_path, "Write the message transcript CSV");
  run_cmd->add_option("--events", run.events_path, "Write the simulation event log CSV");

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run one figure sweep and emit CSV");
  sweep_cmd->add_option("--figure", sweep.figure, "6 | 7 | 8 | 9")
      ->required()
      ->check(CLI::IsMember({6, 7, 8, 9}));
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV (stdout when omitted)");
  sweep_cmd->add_option("--seed", sweep.seed, "Instance generator seed (figures 8, 9)");
  sweep_cmd->add_option("--repeats", sweep.repeats, "Timing repeats per cell (figure 8)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> storage{"spectrum-auction"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    return cmd_sweep(sweep, out);
  } catch (const AuctionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace spectrum::cli
