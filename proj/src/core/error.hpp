// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <stdexcept>
#include <string>

namespace invmilo {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Parse,
  Io,
  NumericalFailure,
  InternalConsistency,
  UnboundedBox,
  TooLarge,
  GNotSubsetOfX,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invmilo
