#pragma once

#include <stdexcept>
#include <string>

namespace hosvd3 {

// Dimension vectors or element counts that do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An index, mode or count outside its admissible range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (e.g. the zero tensor).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input that fails a structural check such as Hermiticity or all-orthogonality.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative kernel did not converge. `mode()` is 1-based, 0 when not tied to a mode.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, int mode = 0)
      : std::runtime_error(what), mode_(mode) {}

  int mode() const noexcept { return mode_; }

 private:
  int mode_;
};

}  // namespace hosvd3
