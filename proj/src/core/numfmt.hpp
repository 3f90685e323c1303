// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace invmilo {

// Shortest round-trip decimal form, locale independent. Infinities are
// written as "inf" / "-inf".
std::string format_double(double v);

// Accepts everything format_double emits plus "+inf", "infinity" and
// magnitudes >= 1e30, which MPS writers use for infinity.
std::optional<double> parse_double(std::string_view text);

// "a;b;c" form used inside CSV cells.
std::string format_point(std::span<const double> x, char sep = ';');

}  // namespace invmilo
