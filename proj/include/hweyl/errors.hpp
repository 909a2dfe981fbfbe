#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hweyl {

// Operands live in Weyl algebras of different dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator or parameter index outside 1..n.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed expression or literal; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// No isomorphism A_n^k -> A_n^k' exists because the twist vectors have a
// different number of nonzero entries.
class ClassificationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Generator images that do not have the linear-in-shifted-y shape required by
// the homomorphism equation set.
class StructureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hweyl
