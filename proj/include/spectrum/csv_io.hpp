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


#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "spectrum/bid.hpp"
#include "spectrum/experiments.hpp"
#include "spectrum/protocol.hpp"
#include "spectrum/sim.hpp"

namespace spectrum {

inline constexpr std::string_view kBidFileHeader = "su_id,channels,price";
inline constexpr std::string_view kSweepHeader =
    "policy,param,satisfied,gain_cents,mean_processing_ns,su_id,response_time_s";
inline constexpr std::string_view kTranscriptHeader =
    "timestamp_s,kind,from,to,su_id,channels,price";
inline constexpr std::string_view kEventLogHeader =
    "timestamp_s,event_kind,agent,detail";

/// Reads `su_id,channels,price` rows. Row order becomes arrival order.
/// Errors name the offending line: "line 4: duplicate su_id 3".
std::vector<Bid> parse_bid_file(std::istream& in);
std::vector<Bid> read_bid_file(const std::filesystem::path& path);
void write_bid_file(std::ostream& out, std::span<const Bid> bids);

void write_sweep_csv(std::ostream& out, std::span<const ResultRow> rows);
void write_transcript_csv(std::ostream& out,
                          std::span<const ProtocolMessage> messages);
void write_event_log_csv(std::ostream& out, std::span<const LoggedEvent> events);

/// Per-SU verdict table followed by a key,value summary block.
void write_outcome_csv(std::ostream& out, std::span<const Bid> bids,
                       const AllocationOutcome& outcome, Policy policy,
                       ChannelPool pool);

}  // namespace spectrum
