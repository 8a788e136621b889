// Copyright 2026 The Authors.
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

#include "propcon/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

#include "propcon/error.hpp"

namespace propcon {

std::string to_string(const Rational& value) {
  BigInt num = numerator_of(value);
  BigInt den = denominator_of(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse,
                "not a rational: '" + std::string(text) + "'");
  }
  BigInt d(std::string{den});
  if (d == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(BigInt(std::string{num}), d);
  return negative ? Rational(-r) : r;
}

Rational harmonic(int k) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(0)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    int j = static_cast<int>(table.size());
    table.push_back(table.back() + Rational(1, j));
  }
  return table[k];
}

}  // namespace propcon
