#pragma once

#include <stdexcept>
#include <string>

namespace peeklab {

// Parameter rejected at validation; message names the offending field and bound.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

// Argument outside the time domain [0, T].
class OutOfDomain : public std::domain_error {
 public:
  explicit OutOfDomain(const std::string& msg) : std::domain_error(msg) {}
};

// A strategy tried to read signal data beyond its information window.
class OutOfWindow : public std::runtime_error {
 public:
  explicit OutOfWindow(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive quadrature did not reach the requested tolerance within its panel budget.
class QuadratureFailure : public std::runtime_error {
 public:
  explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver exhausted its iteration budget.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Per-s window problem undefined because the time shift is flat at s.
class DegenerateShift : public std::runtime_error {
 public:
  explicit DegenerateShift(const std::string& msg) : std::runtime_error(msg) {}
};

// Closed-form shortcut requested outside its domain of validity.
class NotApplicable : public std::logic_error {
 public:
  explicit NotApplicable(const std::string& msg) : std::logic_error(msg) {}
};

// A strategy rule returned NaN or infinity.
class NonFiniteRate : public std::runtime_error {
 public:
  explicit NonFiniteRate(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace peeklab
