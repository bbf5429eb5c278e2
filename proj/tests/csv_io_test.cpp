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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "spectrum/errors.hpp"
#include "support/test_support.hpp"

namespace spectrum {
namespace {

std::vector<Bid> Parse(const std::string& text) {
  std::istringstream in(text);
  return parse_bid_file(in);
}

std::string ErrorOf(const std::string& text) {
  try {
    Parse(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(BidFileTest, ParsesSatisfactionDataset) {
  const auto bids = Parse(
      "su_id,channels,price\n"
      "1,6,300\n2,5,354.35\n3,3,212.6\n4,2,141.70\n5,2,141.68\n");
  EXPECT_EQ(bids, testing::satisfaction_bids());
}

TEST(BidFileTest, ToleratesCrlfBlankLinesAndSpaces) {
  const auto bids = Parse("su_id,channels,price\r\n\r\n 7 , 2 , 1.5 \r\n\n");
  ASSERT_EQ(bids.size(), 1u);
  EXPECT_EQ(bids[0], (Bid{7, 2, Money::from_cents(150), 0}));
}

TEST(BidFileTest, HeaderOnlyIsEmptyList) {
  EXPECT_TRUE(Parse("su_id,channels,price\n").empty());
}

TEST(BidFileTest, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorOf("su_id,channels,price\n1,2,3\n1,4,5\n"),
            "line 3: duplicate su_id 1");
  EXPECT_NE(ErrorOf("su_id,channels,price\n1,0,3\n").find("line 2: channels"),
            std::string::npos);
  EXPECT_NE(ErrorOf("su_id,channels,price\n1,1,-3\n").find("line 2"), std::string::npos);
  EXPECT_NE(ErrorOf("su_id,channels,price\n1,1,3.141\n").find("more than 2 decimal"),
            std::string::npos);
  EXPECT_NE(ErrorOf("su_id,channels,price\n1,1\n").find("expected 3 fields"),
            std::string::npos);
  EXPECT_NE(ErrorOf("su_id,channels,price\n0,1,1\n").find("su_id must be"),
            std::string::npos);
  EXPECT_NE(ErrorOf("id,w,c\n1,1,1\n").find("line 1: expected header"),
            std::string::npos);
  EXPECT_NE(ErrorOf("").find("missing header"), std::string::npos);
}

TEST(BidFileTest, MissingFile) {
  EXPECT_THROW(read_bid_file("/nonexistent/bids.csv"), ValidationError);
}

TEST(BidFileTest, WriteThenParseRoundTrips) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_instance(rng, 30, 1000, 0, 1'000'000'000);
    std::ostringstream out;
    write_bid_file(out, inst.bids);
    ASSERT_EQ(Parse(out.str()), inst.bids);
  }
}

TEST(SweepCsvTest, EmptyColumnsStayEmpty) {
  ResultRow gain;
  gain.policy = Policy::kGreedySealed;
  gain.param = 5;
  gain.satisfied = 2;
  gain.total_gain = Money::from_cents(63000);
  ResultRow wait;
  wait.policy = Policy::kDpSealed;
  wait.param = 7;
  wait.su_id = 10;
  wait.response_time = std::chrono::seconds{1};
  std::ostringstream out;
  write_sweep_csv(out, std::vector<ResultRow>{gain, wait});
  EXPECT_EQ(out.str(),
            "policy,param,satisfied,gain_cents,mean_processing_ns,su_id,response_time_s\n"
            "greedy,5,2,63000,,,\n"
            "dp,7,,,,10,1\n");
}

TEST(TranscriptCsvTest, BidsThenVerdicts) {
  const auto round = run_round(testing::gain_bids(), ChannelPool{5}, Policy::kFifo,
                               SimTime{}, SimTime{std::chrono::seconds{2}});
  std::ostringstream out;
  write_transcript_csv(out, round.messages);
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind(std::string(kTranscriptHeader) + "\n", 0), 0u);
  EXPECT_NE(csv.find("0,bid,1,0,1,3,286.00\n"), std::string::npos);
  EXPECT_NE(csv.find("2,award,0,1,1,3,286.00\n"), std::string::npos);
  EXPECT_NE(csv.find("2,rejection,0,5,5,0,0.00\n"), std::string::npos);
}

TEST(OutcomeCsvTest, VerdictTableAndSummary) {
  const auto bids = testing::satisfaction_bids();
  std::ostringstream out;
  write_outcome_csv(out, bids, dp_allocate(bids, ChannelPool{4}), Policy::kDpSealed,
                    ChannelPool{4});
  EXPECT_EQ(out.str(),
            "su_id,channels,price,verdict\n"
            "1,6,300.00,rejected\n"
            "2,5,354.35,rejected\n"
            "3,3,212.60,rejected\n"
            "4,2,141.70,accepted\n"
            "5,2,141.68,accepted\n"
            "\n"
            "policy,dp\n"
            "channels,4\n"
            "channels_used,4\n"
            "satisfied,2\n"
            "total_gain,283.38\n");
}

}  // namespace
}  // namespace spectrum
