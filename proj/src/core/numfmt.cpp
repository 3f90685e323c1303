// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace invmilo {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body == "inf" || body == "Inf" || body == "INF" || body == "infinity" ||
      body == "Infinity") {
    return negative ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    return std::nullopt;
  }
  if (negative) value = -value;
  if (value >= 1e30) return std::numeric_limits<double>::infinity();
  if (value <= -1e30) return -std::numeric_limits<double>::infinity();
  return value;
}

std::string format_point(std::span<const double> x, char sep) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out.push_back(sep);
    out += format_double(x[j]);
  }
  return out;
}

}  // namespace invmilo
