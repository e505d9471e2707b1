#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgst {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Thrown when an argument violates an operation's precondition
/// (out-of-range vertex, empty grid, n = 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal exactness check fails. Seeing one means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_argument(const std::string& what) {
  throw InvalidArgument(what);
}

}  // namespace detail

}  // namespace pgst
