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


#include "spectrum/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "spectrum/errors.hpp"

namespace spectrum {

std::string_view message_kind_name(MessageKind kind) {
  switch (kind) {
    case MessageKind::kBidSubmission:
      return "bid";
    case MessageKind::kAward:
      return "award";
    case MessageKind::kRejection:
      return "rejection";
  }
  return "unknown";
}

std::string_view protocol_error_name(ProtocolError::Kind kind) {
  switch (kind) {
    case ProtocolError::Kind::kWrongPhase:
      return "wrong_phase";
    case ProtocolError::Kind::kWrongDirection:
      return "wrong_direction";
    case ProtocolError::Kind::kDuplicateBidder:
      return "duplicate_bidder";
    case ProtocolError::Kind::kInvalidBid:
      return "invalid_bid";
  }
  return "unknown";
}

namespace {

PuReceiveResult reject(PuState state, ProtocolError::Kind kind,
                       std::string detail) {
  return {std::move(state), ProtocolError{kind, std::move(detail)}};
}

}  // namespace

PuReceiveResult pu_receive(PuState state, const ProtocolMessage& msg) {
  const std::string from = "from agent " + std::to_string(msg.from);
  if (state.phase != PuPhase::kCollecting) {
    return reject(std::move(state), ProtocolError::Kind::kWrongPhase,
                  "bid " + from + " after round close");
  }
  const Bid* bid = std::get_if<Bid>(&msg.payload);
  if (msg.kind != MessageKind::kBidSubmission || msg.to != kPuAgent ||
      msg.from == kPuAgent || bid == nullptr) {
    return reject(std::move(state), ProtocolError::Kind::kWrongDirection,
                  "PU only accepts SU bid submissions; got " +
                      std::string(message_kind_name(msg.kind)) + " " + from);
  }
  if (bid->su_id != msg.from || bid->channels < 1) {
    return reject(std::move(state), ProtocolError::Kind::kInvalidBid,
                  "malformed bid " + from);
  }
  const bool seen =
      std::any_of(state.received.begin(), state.received.end(),
                  [&](const Bid& b) { return b.su_id == bid->su_id; });
  if (seen) {
    return reject(std::move(state), ProtocolError::Kind::kDuplicateBidder,
                  "second bid " + from);
  }
  Bid stored = *bid;
  stored.arrival_seq = state.received.size();
  state.received.push_back(stored);
  return {std::move(state), std::nullopt};
}

PuDecision pu_close_and_decide(PuState state, SimTime close_time) {
  if (state.phase != PuPhase::kCollecting) {
    throw std::logic_error("pu_close_and_decide: round already closed");
  }
  state.phase = PuPhase::kDeciding;

  AllocationOutcome outcome;
  try {
    outcome = allocate(state.policy, state.received, state.pool);
  } catch (const AuctionError&) {
    outcome = make_outcome(state.received, {});
  }

  std::vector<ProtocolMessage> messages;
  messages.reserve(state.received.size());
  for (const Bid& bid : state.received) {
    const bool won = outcome.verdicts.at(bid.su_id) == Verdict::kAccepted;
    ProtocolMessage msg;
    msg.kind = won ? MessageKind::kAward : MessageKind::kRejection;
    msg.from = kPuAgent;
    msg.to = bid.su_id;
    msg.payload = won ? VerdictSummary{bid.channels, bid.price}
                      : VerdictSummary{};
    msg.timestamp = close_time;
    messages.push_back(msg);
  }
  state.phase = PuPhase::kDone;
  return {std::move(state), std::move(messages), std::move(outcome)};
}

SuSubmission su_submit(SuState state, SimTime now, AgentId pu) {
  if (state.phase != SuPhase::kWaiting) {
    throw std::logic_error("su_submit: SU " + std::to_string(state.su_id) +
                           " already submitted");
  }
  ProtocolMessage msg;
  msg.kind = MessageKind::kBidSubmission;
  msg.from = state.su_id;
  msg.to = pu;
  msg.payload = Bid{state.su_id, state.channels, state.price, 0};
  msg.timestamp = now;
  state.phase = SuPhase::kSubmitted;
  state.submitted_at = now;
  return {std::move(state), std::move(msg)};
}

SuReceiveResult su_receive(SuState state, const ProtocolMessage& msg) {
  const std::string who = "SU " + std::to_string(state.su_id);
  if (msg.kind == MessageKind::kBidSubmission || msg.from != kPuAgent ||
      msg.to != state.su_id) {
    return {std::move(state),
            ProtocolError{ProtocolError::Kind::kWrongDirection,
                          who + " only accepts verdicts addressed to it"}};
  }
  if (state.phase != SuPhase::kSubmitted) {
    return {std::move(state),
            ProtocolError{ProtocolError::Kind::kWrongPhase,
                          who + " got a verdict while not awaiting one"}};
  }
  state.phase = SuPhase::kAnswered;
  state.verdict = msg.kind;
  state.response_time = msg.timestamp - *state.submitted_at;
  return {std::move(state), std::nullopt};
}

RoundTranscript run_round(std::span<const Bid> bids, ChannelPool pool,
                          Policy policy, SimTime open_time,
                          SimTime close_time) {
  RoundTranscript out;
  PuState pu;
  pu.pool = pool;
  pu.policy = policy;

  std::vector<const Bid*> ordered;
  for (const Bid& b : bids) ordered.push_back(&b);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Bid* a, const Bid* b) {
                     return a->arrival_seq < b->arrival_seq;
                   });
  for (const Bid* b : ordered) {
    ProtocolMessage msg{MessageKind::kBidSubmission, b->su_id, kPuAgent, *b,
                        open_time};
    out.messages.push_back(msg);
    auto res = pu_receive(std::move(pu), msg);
    pu = std::move(res.state);
    if (res.error) out.errors.push_back(*res.error);
  }
  auto decision = pu_close_and_decide(std::move(pu), close_time);
  out.messages.insert(out.messages.end(), decision.messages.begin(),
                      decision.messages.end());
  out.outcome = std::move(decision.outcome);
  out.final_state = std::move(decision.state);
  return out;
}

}  // namespace spectrum
