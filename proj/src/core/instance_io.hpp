// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

// Instance files are JSON documents:
//
//   {
//     "name": "knapsack_t1",
//     "problem": { "name": ..., "n": 2, "var_names": [...],
//                  "lower": ["0","0"], "upper": ["3","inf"],
//                  "integer": [true, false],
//                  "rows": [{"name": "r0", "coeffs": [[0,"1"],[1,"1"]],
//                            "relation": ">=", "rhs": "2"}],
//                  "objective": ["1","2"] },
//     "c0": ["1","2"],
//     "x_hat": ["1","1"]
//   }
//
// Numbers are written as shortest round-trip decimal strings ("inf" for
// infinity); plain JSON numbers are accepted on input. "problem" may instead
// be a string naming an MPS file relative to the instance file.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace invmilo {

std::string write_instance_json(const InverseInstance& inst);

// base_dir resolves a relative MPS path; empty means the working directory.
InverseInstance parse_instance_json(std::string_view text, const std::string& base_dir = "");

InverseInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InverseInstance& inst);

// One vector per line; entries separated by spaces, tabs, commas or
// semicolons. '#' starts a comment, blank lines are skipped.
std::vector<std::vector<double>> parse_point_list(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace invmilo
