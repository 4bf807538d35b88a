// Copyright 2026 The rosenthal authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rosenthal {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument above a hard size cap of an exact routine.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A series did not reach its tail bound within the term budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity or ordering that must hold did not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rosenthal
