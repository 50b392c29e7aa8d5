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

// Parameter discovery: which blocklengths a prime supports, the canonical
// kernel element for the maximal length, and a check of the published
// parameter table.

#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ffdct/errors.hpp"
#include "ffdct/gaussian.hpp"
#include "ffdct/number_theory.hpp"
#include "ffdct/prime_field.hpp"

namespace ffdct {

/// Maximal-length parameters for one prime. lambda has order p + 1, so the
/// trigonometric base lambda^2 has order (p + 1)/2 and N = (p + 1)/4.
struct ParamRow {
  std::uint64_t p = 0;
  std::uint64_t block_length = 0;
  std::uint64_t lambda_re = 0;
  std::uint64_t lambda_im = 0;
  std::uint64_t lambda_order = 0;
  std::uint64_t extension_field_size = 0;  ///< p^2
  bool mersenne = false;

  friend bool operator==(const ParamRow&, const ParamRow&) = default;
};

/// Every N with 4N | p + 1, ascending. These are the lengths with a
/// GF(p)-valued kernel.
inline std::vector<std::size_t> supported_lengths(const Prime& prime) {
  std::vector<std::size_t> out;
  for (std::uint64_t d : divisors((prime.value() + 1) / 4)) out.push_back(static_cast<std::size_t>(d));
  return out;
}

/// Limited to p < 2^32.
inline ParamRow discover(const Prime& prime) {
  const std::uint64_t p = prime.value();
  if (p > 0xffffffffULL) throw domain_error("parameter discovery limited to p < 2^32");
  const GaussInt lambda = find_unimodular_of_order(prime, p + 1);
  ParamRow row;
  row.p = p;
  row.block_length = (p + 1) / 4;
  row.lambda_re = lambda.raw().re;
  row.lambda_im = lambda.raw().im;
  row.lambda_order = p + 1;
  row.extension_field_size = p * p;
  row.mersenne = prime.mersenne_exponent().has_value();
  return row;
}

inline ParamRow discover(std::uint64_t p) { return discover(Prime(p)); }

/// Ascending rows for every prime p <= limit with p = 3 (mod 4).
inline std::vector<ParamRow> scan_primes(std::uint64_t limit) {
  std::vector<ParamRow> rows;
  for (std::uint64_t p = 3; p <= limit; p += 4) {
    if (is_prime(p)) rows.push_back(discover(Prime(p)));
  }
  return rows;
}

/// Comma-delimited: p,N,lambda_re,lambda_im,order,p_squared,mersenne_flag
inline std::string to_delimited(const ParamRow& r) {
  std::ostringstream os;
  os << r.p << ',' << r.block_length << ',' << r.lambda_re << ',' << r.lambda_im << ',' << r.lambda_order << ','
     << r.extension_field_size << ',' << (r.mersenne ? 1 : 0);
  return os.str();
}

inline ParamRow parse_delimited(std::string_view line) {
  std::array<std::uint64_t, 7> f{};
  std::size_t idx = 0;
  const char* pos = line.data();
  const char* end = line.data() + line.size();
  while (true) {
    if (idx == f.size()) throw domain_error("parameter record has too many fields");
    auto [next, ec] = std::from_chars(pos, end, f[idx]);
    if (ec != std::errc{} || next == pos) throw domain_error("malformed parameter record: " + std::string(line));
    ++idx;
    if (next == end) break;
    if (*next != ',') throw domain_error("malformed parameter record: " + std::string(line));
    pos = next + 1;
  }
  if (idx != f.size()) throw domain_error("parameter record needs 7 fields");
  if (f[6] > 1) throw domain_error("mersenne flag must be 0 or 1");
  return ParamRow{f[0], f[1], f[2], f[3], f[4], f[5], f[6] == 1};
}

/// key=value record, space separated.
inline std::string to_structured(const ParamRow& r) {
  std::ostringstream os;
  os << "p=" << r.p << " N=" << r.block_length << " lambda_re=" << r.lambda_re << " lambda_im=" << r.lambda_im
     << " order=" << r.lambda_order << " p_squared=" << r.extension_field_size
     << " mersenne=" << (r.mersenne ? "true" : "false");
  return os.str();
}

/// One printed row of the published parameter table, kept verbatim.
struct PublishedRow {
  std::uint64_t p;
  std::uint64_t block_length;
  std::uint64_t element_re;
  std::uint64_t element_im;
  std::uint64_t extension_field_size;
  std::uint64_t order;
  bool mersenne_marked;
};

/// The twelve published rows, transcribed as printed (errors included).
inline std::span<const PublishedRow> published_parameter_table() {
  static constexpr std::array<PublishedRow, 12> kRows{{
      {7, 2, 2, 2, 49, 8, true},
      {23, 6, 4, 10, 529, 24, false},
      {31, 8, 2, 11, 961, 32, true},
      {47, 12, 4, 19, 2209, 48, false},
      {71, 18, 8, 24, 5041, 72, false},
      {79, 20, 2, 32, 6241, 80, false},
      {103, 26, 2, 10, 10609, 103, false},
      {127, 32, 2, 39, 16129, 128, true},
      {151, 38, 2, 65, 22801, 152, false},
      {167, 42, 4, 73, 27889, 168, false},
      {191, 48, 6, 27, 36481, 192, false},
      {199, 50, 2, 14, 39601, 200, false},
  }};
  return kRows;
}

struct RowVerdict {
  PublishedRow row;
  bool unimodular = false;
  std::uint64_t computed_order = 0;
  bool order_matches = false;
  bool length_matches = false;     ///< printed N == (p + 1)/4
  bool extension_matches = false;  ///< printed size == p^2
  bool mersenne_matches = false;   ///< star marker agrees with mersenne_exponent

  bool pass() const { return unimodular && order_matches && length_matches && extension_matches; }

  std::string describe() const {
    std::ostringstream os;
    os << "p=" << row.p << " element=" << row.element_re << "+j" << row.element_im << " printed_order=" << row.order
       << " computed_order=" << computed_order << " unimodular=" << (unimodular ? "yes" : "no")
       << " N_ok=" << (length_matches ? "yes" : "no") << " p2_ok=" << (extension_matches ? "yes" : "no");
    return os.str();
  }
};

/// Checks each printed row against computed values. Never throws on a bad
/// row; the verdict carries the failure.
inline std::vector<RowVerdict> verify_published_table() {
  std::vector<RowVerdict> out;
  for (const PublishedRow& row : published_parameter_table()) {
    RowVerdict v;
    v.row = row;
    const Prime prime(row.p);
    const GaussInt element(prime, row.element_re % row.p, row.element_im % row.p);
    v.unimodular = is_unimodular(element);
    v.computed_order = element.is_zero() ? 0 : order(element).value;
    v.order_matches = v.computed_order == row.order;
    v.length_matches = row.block_length == (row.p + 1) / 4;
    v.extension_matches = row.extension_field_size == row.p * row.p;
    v.mersenne_matches = row.mersenne_marked == prime.mersenne_exponent().has_value();
    out.push_back(v);
  }
  return out;
}

}  // namespace ffdct
