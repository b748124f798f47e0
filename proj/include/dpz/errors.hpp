// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dpz {

// Malformed or out-of-domain input (wrong arity, unknown token, singular basis).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A geometric series was requested for a monomial with a constant term.
class DivergenceError : public InputError {
 public:
  using InputError::InputError;
};

// A coefficient was requested outside the truncation window of a series.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A closed formula was asked for on a class where it is not known to hold.
class NotCertifiedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dpz
