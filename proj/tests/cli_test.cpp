// Copyright 2026 The ffdct Authors.
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

#include "ffdct_cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace ffdct::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream is(text);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

TEST(CliTransformTest, ReferenceExample) {
  const auto r = invoke({"transform", "--p", "31", "--n", "8", "--lambda", "29,20"}, "1 2 3 4 5 6 7 8\n");
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "10 20 0 17 0 12 0 5\n");
  const auto inv = invoke({"inverse", "--p", "31", "--n", "8", "--lambda", "29,20"}, "10 20 0 17 0 12 0 5");
  EXPECT_EQ(inv.code, kOk) << inv.err;
  EXPECT_EQ(inv.out, "1 2 3 4 5 6 7 8\n");
}

TEST(CliTransformTest, StructuredAndMultiBlock) {
  const auto r = invoke({"transform", "--p", "31", "--n", "8", "--lambda", "29,20", "--format", "structured"},
                        "1 2 3 4 5 6 7 8\n1 0 0 0 0 0 0 0\n");
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "block=0 values=10,20,0,17,0,12,0,5\nblock=1 values=2,27,14,10,8,20,5,22\n");
}

TEST(CliTransformTest, StrategiesAgree) {
  std::string input;
  for (int i = 0; i < 64; ++i) input += std::to_string((i * 37 + 5) % 127) + " ";
  const auto naive = invoke({"transform", "--p", "127", "--n", "32", "--strategy", "naive"}, input);
  const auto fast = invoke({"transform", "--p", "127", "--n", "32", "--strategy", "fast"}, input);
  ASSERT_EQ(naive.code, kOk);
  EXPECT_EQ(naive.out, fast.out);
  const auto back = invoke({"inverse", "--p", "127", "--n", "32"}, naive.out);
  ASSERT_EQ(back.code, kOk);
  std::istringstream a(input), b(back.out);
  std::uint64_t x = 0, y = 0;
  while (a >> x) {
    ASSERT_TRUE(b >> y);
    EXPECT_EQ(x, y);
  }
}

TEST(CliTransformTest, ReduceFlag) {
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8", "--lambda", "29,20"}, "32 2 3 4 5 6 7 8").code, kData);
  const auto r =
      invoke({"transform", "--p", "31", "--n", "8", "--lambda", "29,20", "--reduce"}, "32 33 -28 4 5 6 7 8");
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "10 20 0 17 0 12 0 5\n");
}

TEST(CliErrorTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"transform", "--n", "8"}).code, kUsage);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8", "--strategy", "quick"}, "1").code, kUsage);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8", "--lambda", "29"}, "1").code, kUsage);
  EXPECT_EQ(invoke({"transform", "--p", "13", "--n", "1"}, "1").code, kParameter);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "16"}, "1").code, kParameter);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8", "--lambda", "7,13"}, "1").code, kParameter);
  EXPECT_EQ(invoke({"transform", "--p", "23", "--n", "6", "--strategy", "fast"}, "1 2 3 4 5 6").code, kParameter);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8"}, "1 2 3").code, kData);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8"}, "1 2 3 4 5 6 7 x").code, kData);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8"}, "").code, kData);
  EXPECT_EQ(invoke({"transform", "--p", "31", "--n", "8", "--input", "/nonexistent/file"}).code, kData);
  const auto r = invoke({"transform", "--p", "31", "--n", "16"}, "1");
  EXPECT_NE(r.err.find("4N must divide"), std::string::npos) << r.err;
}

TEST(CliHelpTest, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("transform"), std::string::npos);
}

TEST(CliMatrixTest, ForwardAndInverse) {
  const auto m = invoke({"matrix", "--p", "31", "--n", "8", "--lambda", "29,20"});
  ASSERT_EQ(m.code, kOk);
  EXPECT_EQ(m.out.substr(0, m.out.find('\n') + 1), "2 2 2 2 2 2 2 2\n");
  EXPECT_NE(m.out.find("20 4 22 10 21 9 27 11\n"), std::string::npos);
  const auto mi = invoke({"matrix", "--p", "31", "--n", "8", "--lambda", "29,20", "--inverse"});
  ASSERT_EQ(mi.code, kOk);
  EXPECT_EQ(mi.out.substr(0, mi.out.find('\n') + 1), "2 23 28 20 16 9 10 13\n");
}

TEST(CliParamsTest, SinglePrime) {
  const auto r = invoke({"params", "--p", "31"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("supported lengths: 1 2 4 8"), std::string::npos);
  EXPECT_NE(r.out.find("canonical lambda: 2+j11 (order 32)"), std::string::npos);
  EXPECT_NE(r.out.find("mersenne: yes"), std::string::npos);
  EXPECT_EQ(invoke({"params", "--p", "29"}).code, kParameter);
  EXPECT_EQ(invoke({"params"}).code, kUsage);
}

TEST(CliParamsTest, ScanAndVerify) {
  const auto scan = invoke({"params", "--scan", "31"});
  ASSERT_EQ(scan.code, kOk);
  EXPECT_EQ(count_lines_starting(scan.out, ""), 6u);
  EXPECT_NE(scan.out.find("31,8,2,11,32,961,1\n"), std::string::npos);
  const auto verify = invoke({"params", "--verify-table"});
  ASSERT_EQ(verify.code, kOk);
  EXPECT_EQ(count_lines_starting(verify.out, "verdict=pass"), 9u);
  EXPECT_EQ(count_lines_starting(verify.out, "verdict=fail"), 3u);
}

TEST(CliBenchTest, RecordsPerLength) {
  const auto r = invoke({"bench", "--p", "23", "--n", "2,6", "--reps", "2", "--format", "structured"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("p=23 N=2 naive_median_ns="), std::string::npos);
  EXPECT_NE(r.out.find("match=true"), std::string::npos);
  EXPECT_NE(r.out.find("p=23 N=6 status=unsupported"), std::string::npos);
  EXPECT_EQ(invoke({"bench", "--p", "23", "--n", "2,x"}).code, kUsage);
}

TEST(CliSelftestTest, ReportsKnownMisprints) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = invoke({"selftest"});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed, std::chrono::seconds(60));
  EXPECT_EQ(count_lines_starting(r.out, "EXPECTED-MISMATCH"), 2u) << r.out;
  EXPECT_NE(r.out.find("EXPECTED-MISMATCH example.forward-matrix[5,1]"), std::string::npos);
  EXPECT_NE(r.out.find("EXPECTED-MISMATCH table.p=103"), std::string::npos);
  EXPECT_EQ(count_lines_starting(r.out, "PASS example."), 6u);
  // Two published rows carry elements of the wrong order; see README.
  EXPECT_NE(r.out.find("FAIL table.p=71"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL table.p=167"), std::string::npos);
  EXPECT_EQ(count_lines_starting(r.out, "FAIL"), 2u) << r.out;
  EXPECT_EQ(r.code, kSelftestFailed);
}

TEST(CliSelftestTest, InjectedFaultIsCaught) {
  const auto r = invoke({"selftest", "--inject-fault", "--samples", "5"});
  EXPECT_EQ(r.code, kSelftestFailed);
  EXPECT_NE(r.out.find("FAIL example.forward"), std::string::npos);
  EXPECT_NE(r.out.find("first-failure=example.forward\n"), std::string::npos) << r.out;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  pclose(pipe);
  return out;
}

TEST(CliBinaryTest, PipesCompose) {
  const std::string tool = FFDCT_TOOL_PATH;
  const std::string out = capture("printf '1 2 3 4 5 6 7 8' | '" + tool + "' transform --p 31 --n 8 --lambda 29,20 | '" +
                                  tool + "' inverse --p 31 --n 8 --lambda 29,20");
  EXPECT_EQ(out, "1 2 3 4 5 6 7 8\n");
}

}  // namespace
}  // namespace ffdct::cli
