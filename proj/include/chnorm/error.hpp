#ifndef CHNORM_ERROR_HPP
#define CHNORM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chnorm {

// Malformed external input: algebra files, rational strings, coordinate lists.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (dimension mismatch, mixed
// algebras, non-square matrix, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact-arithmetic postcondition failed. These checks cannot fire on
// valid inputs; seeing one means a kernel bug, not a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chnorm

#endif  // CHNORM_ERROR_HPP
