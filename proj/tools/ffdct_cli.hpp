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

// Command-line front end. Kept header-only so the test suite can drive it
// in-process with string streams.
//
// Exit codes: 0 success, 1 usage error, 2 parameter-validation error,
// 3 data error, 4 self-test failure.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "ffdct/ffdct.hpp"

namespace ffdct::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParameter = 2,
  kData = 3,
  kSelftestFailed = 4,
};

enum class Format { plain, structured };

struct CliConfig {
  std::uint64_t p = 0;
  std::optional<std::size_t> n;
  std::string lambda;  // "re,im"; empty means canonical
  std::string strategy = "auto";
  std::string input = "-";
  std::string format = "plain";
  bool reduce = false;
  bool inverse_matrix = false;
  std::uint64_t scan_limit = 0;
  bool verify_table = false;
  std::string bench_lengths;
  std::size_t repetitions = 5;
  bool inject_fault = false;
  std::size_t samples = 50;
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter-stage failures: anything ffdct throws while building a plan.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::optional<std::int64_t> parse_int(std::string_view tok) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

inline std::pair<std::uint64_t, std::uint64_t> parse_lambda(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--lambda expects re,im");
  auto re = parse_int(std::string_view(text).substr(0, comma));
  auto im = parse_int(std::string_view(text).substr(comma + 1));
  if (!re || !im || *re < 0 || *im < 0) throw UsageError("--lambda expects two non-negative integers re,im");
  return {static_cast<std::uint64_t>(*re), static_cast<std::uint64_t>(*im)};
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "naive") return Strategy::naive;
  if (s == "fast") return Strategy::fast;
  throw UsageError("--strategy must be auto, naive or fast");
}

inline Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "structured") return Format::structured;
  throw UsageError("--format must be plain or structured");
}

inline Prime make_prime(std::uint64_t p) {
  try {
    return Prime(p);
  } catch (const ffdct::error& e) {
    throw ParameterError(e.what());
  }
}

inline TransformPlan make_plan(const CliConfig& cfg) {
  const Prime prime = make_prime(cfg.p);
  std::optional<GaussInt> lambda;
  const Strategy strategy = parse_strategy(cfg.strategy);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> lam;
  if (!cfg.lambda.empty()) lam = parse_lambda(cfg.lambda);
  try {
    if (lam) lambda = GaussInt(prime, lam->first, lam->second);
    return TransformPlan::create(prime, *cfg.n, lambda, strategy);
  } catch (const ffdct::error& e) {
    throw ParameterError(e.what());
  }
}

inline std::vector<std::uint64_t> read_values(const CliConfig& cfg, std::istream& in, std::uint64_t p) {
  std::ifstream file;
  std::istream* src = &in;
  if (cfg.input != "-") {
    file.open(cfg.input);
    if (!file) throw DataError("cannot open input file " + cfg.input);
    src = &file;
  }
  std::vector<std::uint64_t> out;
  std::string tok;
  while (*src >> tok) {
    auto v = parse_int(tok);
    if (!v) throw DataError("not an integer: '" + tok + "'");
    if (cfg.reduce) {
      out.push_back(normalize(*v, Prime(p)).value());
      continue;
    }
    if (*v < 0 || static_cast<std::uint64_t>(*v) >= p) {
      throw DataError("value " + tok + " outside [0, " + std::to_string(p - 1) + "]; pass --reduce to reduce mod p");
    }
    out.push_back(static_cast<std::uint64_t>(*v));
  }
  return out;
}

template <typename Seq>
std::string join(const Seq& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline int cmd_transform(const CliConfig& cfg, bool inverse_direction, std::istream& in, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const TransformPlan plan = make_plan(cfg);
  const std::size_t n = plan.blocklength();
  const auto values = read_values(cfg, in, plan.prime().value());
  if (values.empty() || values.size() % n != 0) {
    throw DataError("input has " + std::to_string(values.size()) + " values; need a positive multiple of N = " +
                    std::to_string(n));
  }
  for (std::size_t b = 0; b * n < values.size(); ++b) {
    const std::span<const std::uint64_t> block(values.data() + b * n, n);
    const auto result = inverse_direction ? inverse(plan, block) : forward(plan, block);
    if (format == Format::plain) {
      out << join(result, ' ') << '\n';
    } else {
      out << "block=" << b << " values=" << join(result, ',') << '\n';
    }
  }
  return kOk;
}

inline int cmd_matrix(const CliConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const TransformPlan plan = make_plan(cfg);
  const Matrix m = cfg.inverse_matrix ? inverse_matrix(plan) : forward_matrix(plan);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::vector<std::uint64_t> row(m.data.begin() + static_cast<std::ptrdiff_t>(r * m.cols),
                                   m.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols));
    if (format == Format::plain) {
      out << join(row, ' ') << '\n';
    } else {
      out << "row=" << r << " values=" << join(row, ',') << '\n';
    }
  }
  return kOk;
}

inline int cmd_params(const CliConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  if (cfg.verify_table) {
    for (const RowVerdict& v : verify_published_table()) {
      out << "verdict=" << (v.pass() ? "pass" : "fail") << ' ' << v.describe() << '\n';
    }
    return kOk;
  }
  if (cfg.scan_limit != 0) {
    for (const ParamRow& row : scan_primes(cfg.scan_limit)) {
      out << (format == Format::plain ? to_delimited(row) : to_structured(row)) << '\n';
    }
    return kOk;
  }
  if (cfg.p == 0) throw UsageError("params needs --p, --scan or --verify-table");
  const Prime prime = make_prime(cfg.p);
  ParamRow row;
  try {
    row = discover(prime);
  } catch (const ffdct::error& e) {
    throw ParameterError(e.what());
  }
  const auto lengths = supported_lengths(prime);
  if (format == Format::plain) {
    out << "p: " << row.p << '\n'
        << "supported lengths: " << join(lengths, ' ') << '\n'
        << "max block length: " << row.block_length << '\n'
        << "canonical lambda: " << row.lambda_re << "+j" << row.lambda_im << " (order " << row.lambda_order << ")\n"
        << "extension field size: " << row.extension_field_size << '\n'
        << "mersenne: " << (row.mersenne ? "yes" : "no") << '\n';
  } else {
    out << "supported_lengths=" << join(lengths, ',') << ' ' << to_structured(row) << '\n';
  }
  return kOk;
}

inline int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  const Prime prime = make_prime(cfg.p);
  std::vector<std::size_t> lengths;
  std::stringstream ss(cfg.bench_lengths);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto v = parse_int(tok);
    if (!v || *v <= 0) throw UsageError("--n expects a comma-separated list of positive integers");
    lengths.push_back(static_cast<std::size_t>(*v));
  }
  if (lengths.empty()) throw UsageError("bench needs --n");
  for (const BenchRecord& rec : bench(prime, lengths, cfg.repetitions)) {
    if (format == Format::structured || !rec.supported) {
      out << rec.to_record() << '\n';
      continue;
    }
    out << "p=" << rec.p << " N=" << rec.n << "  naive " << rec.naive_median_ns << " ns  fast " << rec.fast_median_ns
        << " ns  speedup " << rec.speedup() << "x  match " << (rec.match ? "yes" : "NO") << '\n';
  }
  return kOk;
}

inline int cmd_selftest(const CliConfig& cfg, std::ostream& out) {
  SelftestOptions opts;
  opts.corrupt_trig_table = cfg.inject_fault;
  opts.random_samples = cfg.samples;
  const SelftestReport report = run_selftest(opts);
  report.print(out);
  return report.ok() ? kOk : kSelftestFailed;
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite field discrete cosine transform over GF(p), p = 3 (mod 4)", "ffdct"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_plan_options = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime modulus, p = 3 (mod 4)")->required();
    sub->add_option("--n", cfg.n, "blocklength N; 4N must divide p + 1")->required();
    sub->add_option("--lambda", cfg.lambda, "kernel element re,im of order 4N (default: canonical)");
    sub->add_option("--strategy", cfg.strategy, "auto, naive or fast")->capture_default_str();
    sub->add_option("--format", cfg.format, "plain or structured")->capture_default_str();
  };

  auto* params = app.add_subcommand("params", "supported blocklengths and canonical kernel element");
  params->add_option("--p", cfg.p, "prime modulus");
  params->add_option("--scan", cfg.scan_limit, "list every prime = 3 (mod 4) up to this bound");
  params->add_flag("--verify-table", cfg.verify_table, "check the published parameter table");
  params->add_option("--format", cfg.format, "plain or structured")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "forward transform of whitespace-separated residues");
  add_plan_options(transform);
  transform->add_option("--input", cfg.input, "input file, - for stdin")->capture_default_str();
  transform->add_flag("--reduce", cfg.reduce, "reduce out-of-range values mod p instead of rejecting them");

  auto* inverse_cmd = app.add_subcommand("inverse", "inverse transform of whitespace-separated residues");
  add_plan_options(inverse_cmd);
  inverse_cmd->add_option("--input", cfg.input, "input file, - for stdin")->capture_default_str();
  inverse_cmd->add_flag("--reduce", cfg.reduce, "reduce out-of-range values mod p instead of rejecting them");

  auto* matrix = app.add_subcommand("matrix", "dump the forward (or inverse) transform matrix");
  add_plan_options(matrix);
  matrix->add_flag("--inverse", cfg.inverse_matrix, "dump the inverse matrix");

  auto* bench_cmd = app.add_subcommand("bench", "time naive vs radix-2 paths");
  bench_cmd->add_option("--p", cfg.p, "prime modulus")->required();
  bench_cmd->add_option("--n", cfg.bench_lengths, "comma-separated blocklengths")->required();
  bench_cmd->add_option("--reps", cfg.repetitions, "timed repetitions per length")->capture_default_str();
  bench_cmd->add_option("--format", cfg.format, "plain or structured")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the bundled reproduction battery");
  selftest->add_option("--samples", cfg.samples, "random signals per prime")->capture_default_str();
  selftest->add_flag("--inject-fault", cfg.inject_fault, "corrupt one kernel table entry (negative control)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ffdct: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (params->parsed()) return detail::cmd_params(cfg, out);
    if (transform->parsed()) return detail::cmd_transform(cfg, false, in, out);
    if (inverse_cmd->parsed()) return detail::cmd_transform(cfg, true, in, out);
    if (matrix->parsed()) return detail::cmd_matrix(cfg, out);
    if (bench_cmd->parsed()) return detail::cmd_bench(cfg, out);
    if (selftest->parsed()) return detail::cmd_selftest(cfg, out);
  } catch (const detail::UsageError& e) {
    err << "ffdct: " << e.what() << '\n';
    return kUsage;
  } catch (const detail::ParameterError& e) {
    err << "ffdct: " << e.what() << '\n';
    return kParameter;
  } catch (const detail::DataError& e) {
    err << "ffdct: " << e.what() << '\n';
    return kData;
  } catch (const ffdct::error& e) {
    err << "ffdct: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace ffdct::cli
