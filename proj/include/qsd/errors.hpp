#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsd {

/// Pole, division by zero, or a value outside its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Generator index outside 1 <= j <= i <= n.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operands of incompatible kinds, e.g. f0 in a plain polynomial context.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsd
