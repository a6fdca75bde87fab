#pragma once

#include <stdexcept>
#include <string>

namespace berge_turan {

/// Bad numeric argument (e.g. r = 0 for a Turán graph).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed structural input (edge lists, graph6 strings, hypergraph text).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A search or enumeration was asked to go beyond its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A proven inequality or internal post-condition failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace berge_turan
