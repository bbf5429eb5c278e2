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


#include "spectrum/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "spectrum/errors.hpp"

namespace spectrum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& value) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<Bid> parse_bid_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("line " + std::to_string(line_no) + ": " + why);
  };

  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (trim(line) != kBidFileHeader) {
      fail("expected header '" + std::string(kBidFileHeader) + "'");
    }
    have_header = true;
  }
  if (!have_header) {
    throw ValidationError("bid file is empty (missing header '" +
                          std::string(kBidFileHeader) + "')");
  }

  std::vector<Bid> bids;
  std::unordered_set<SuId> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 3) {
      fail("expected 3 fields, got " + std::to_string(fields.size()));
    }
    Bid bid;
    if (!parse_int(fields[0], bid.su_id) || bid.su_id == 0) {
      fail("su_id must be a positive integer, got '" + std::string(fields[0]) + "'");
    }
    if (!parse_int(fields[1], bid.channels) || bid.channels < 1) {
      fail("channels must be an integer >= 1, got '" + std::string(fields[1]) + "'");
    }
    try {
      bid.price = Money::parse(fields[2]);
    } catch (const ValidationError& e) {
      fail(e.what());
    }
    if (!seen.insert(bid.su_id).second) {
      fail("duplicate su_id " + std::to_string(bid.su_id));
    }
    bid.arrival_seq = bids.size();
    bids.push_back(bid);
  }
  validate_bids(bids);  // money sum overflow
  return bids;
}

std::vector<Bid> read_bid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open bid file '" + path.string() + "'");
  try {
    return parse_bid_file(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_bid_file(std::ostream& out, std::span<const Bid> bids) {
  out << kBidFileHeader << '\n';
  for (const Bid& b : bids) {
    out << b.su_id << ',' << b.channels << ',' << b.price << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kSweepHeader << '\n';
  for (const ResultRow& r : rows) {
    out << policy_name(r.policy) << ',' << r.param << ',';
    if (r.satisfied) out << *r.satisfied;
    out << ',';
    if (r.total_gain) out << r.total_gain->cents();
    out << ',';
    if (r.mean_processing) out << r.mean_processing->count();
    out << ',';
    if (r.su_id) out << *r.su_id;
    out << ',';
    if (r.response_time) out << format_seconds(*r.response_time);
    out << '\n';
  }
}

void write_transcript_csv(std::ostream& out,
                          std::span<const ProtocolMessage> messages) {
  out << kTranscriptHeader << '\n';
  for (const ProtocolMessage& m : messages) {
    out << format_seconds(m.timestamp) << ',' << message_kind_name(m.kind) << ','
        << m.from << ',' << m.to << ',';
    if (const auto* bid = std::get_if<Bid>(&m.payload)) {
      out << bid->su_id << ',' << bid->channels << ',' << bid->price;
    } else {
      const auto& v = std::get<VerdictSummary>(m.payload);
      out << m.to << ',' << v.channels_granted << ',' << v.price_due;
    }
    out << '\n';
  }
}

void write_event_log_csv(std::ostream& out, std::span<const LoggedEvent> events) {
  out << kEventLogHeader << '\n';
  for (const LoggedEvent& e : events) {
    out << format_seconds(e.time) << ',' << event_kind_name(e.kind) << ','
        << e.agent << ',' << e.detail << '\n';
  }
}

void write_outcome_csv(std::ostream& out, std::span<const Bid> bids,
                       const AllocationOutcome& outcome, Policy policy,
                       ChannelPool pool) {
  out << "su_id,channels,price,verdict\n";
  for (const Bid& b : bids) {
    const bool won = outcome.verdicts.at(b.su_id) == Verdict::kAccepted;
    out << b.su_id << ',' << b.channels << ',' << b.price << ','
        << (won ? "accepted" : "rejected") << '\n';
  }
  out << '\n'
      << "policy," << policy_name(policy) << '\n'
      << "channels," << pool.free_channels() << '\n'
      << "channels_used," << outcome.channels_used << '\n'
      << "satisfied," << outcome.winners.size() << '\n'
      << "total_gain," << outcome.total_gain << '\n';
}

}  // namespace spectrum
