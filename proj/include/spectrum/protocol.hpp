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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectrum/allocation.hpp"
#include "spectrum/bid.hpp"
#include "spectrum/sim_clock.hpp"

namespace spectrum {

// Single-round sealed-bid exchange between one primary user (the seller,
// which also runs the auction) and any number of secondary users. Agents
// only interact through ProtocolMessage values.

using AgentId = std::uint64_t;

// SU agents reuse their su_id, which is always >= 1.
inline constexpr AgentId kPuAgent = 0;

enum class MessageKind { kBidSubmission, kAward, kRejection };

std::string_view message_kind_name(MessageKind kind);

// What an SU is told at round close. A rejection grants nothing and owes
// nothing; an award carries the bid's own price (first-price payment).
struct VerdictSummary {
  std::int64_t channels_granted = 0;
  Money price_due;

  friend bool operator==(const VerdictSummary&,
                         const VerdictSummary&) = default;
};

struct ProtocolMessage {
  MessageKind kind = MessageKind::kBidSubmission;
  AgentId from = 0;
  AgentId to = 0;
  std::variant<Bid, VerdictSummary> payload;
  SimTime timestamp{};

  friend bool operator==(const ProtocolMessage&,
                         const ProtocolMessage&) = default;
};

struct ProtocolError {
  enum class Kind { kWrongPhase, kWrongDirection, kDuplicateBidder, kInvalidBid };
  Kind kind;
  std::string detail;

  friend bool operator==(const ProtocolError&, const ProtocolError&) = default;
};

std::string_view protocol_error_name(ProtocolError::Kind kind);

// ---------------------------------------------------------------------------
// Primary user

enum class PuPhase { kCollecting, kDeciding, kDone };

struct PuState {
  PuPhase phase = PuPhase::kCollecting;
  std::vector<Bid> received;
  ChannelPool pool;
  Policy policy = Policy::kDpSealed;

  friend bool operator==(const PuState&, const PuState&) = default;
};

struct PuReceiveResult {
  PuState state;
  std::optional<ProtocolError> error;  // set => state is the input, unchanged
};

/// Accepts one BidSubmission while collecting. The stored bid gets
/// arrival_seq = number of bids already received; whatever sequence the SU
/// put on the wire is ignored. Anything else (wrong phase, wrong kind or
/// direction, repeated bidder, zero channels) is dropped with an error.
PuReceiveResult pu_receive(PuState state, const ProtocolMessage& msg);

struct PuDecision {
  PuState state;                          // phase == kDone
  std::vector<ProtocolMessage> messages;  // one per bidder, in arrival order
  AllocationOutcome outcome;
};

/// Closes the round, runs the configured policy once and emits one Award or
/// Rejection per bidder, all stamped `close_time`. If the allocation rejects
/// the bid set (e.g. money overflow) every bidder is rejected.
/// Throws std::logic_error unless the state is collecting.
PuDecision pu_close_and_decide(PuState state, SimTime close_time);

// ---------------------------------------------------------------------------
// Secondary user

enum class SuPhase { kWaiting, kSubmitted, kAnswered };

struct SuState {
  SuId su_id = 0;
  std::int64_t channels = 0;
  Money price;
  SuPhase phase = SuPhase::kWaiting;
  std::optional<SimTime> submitted_at;
  std::optional<SimDuration> response_time;
  std::optional<MessageKind> verdict;

  friend bool operator==(const SuState&, const SuState&) = default;
};

struct SuSubmission {
  SuState state;
  ProtocolMessage message;
};

/// Waiting -> Submitted. Throws std::logic_error from any other phase.
SuSubmission su_submit(SuState state, SimTime now, AgentId pu = kPuAgent);

struct SuReceiveResult {
  SuState state;
  std::optional<ProtocolError> error;
};

/// Submitted -> Answered on an Award/Rejection addressed to this SU;
/// response_time = message timestamp - submission time.
SuReceiveResult su_receive(SuState state, const ProtocolMessage& msg);

// ---------------------------------------------------------------------------

/// Runs a whole round with every bid delivered at `open_time` and the round
/// closed at `close_time`. Returns the transcript (submissions then
/// verdicts) and the outcome. Used by the CLI and by replay tests.
struct RoundTranscript {
  std::vector<ProtocolMessage> messages;
  std::vector<ProtocolError> errors;
  AllocationOutcome outcome;
  PuState final_state;
};

RoundTranscript run_round(std::span<const Bid> bids, ChannelPool pool,
                          Policy policy, SimTime open_time, SimTime close_time);

}  // namespace spectrum
