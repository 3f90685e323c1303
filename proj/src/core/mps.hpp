// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <string>
#include <string_view>

#include "model.hpp"

namespace invmilo {

// Free-format MPS: NAME, ROWS, COLUMNS (INTORG/INTEND markers), RHS, RANGES,
// BOUNDS, ENDATA. The first N row becomes the problem objective; further N
// rows are dropped.
//
// Columns default to [0, +inf) whether or not they sit between integer
// markers; BV sets [0, 1]. A ranged row becomes two rows, the second named
// "<row>_rng". Errors are Error(Parse) with messages of the form
// "line 12: DuplicateRow: ...".
ForwardProblem parse_mps(std::string_view text);

ForwardProblem read_mps_file(const std::string& path);

}  // namespace invmilo
