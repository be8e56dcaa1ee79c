#pragma once

#include <stdexcept>
#include <string>

namespace pelab {

// Inputs outside an operation's documented domain.
// std::domain_error is used directly for most precondition violations.

// A size limit refusal (e.g. asking for a 2^30-entry state vector). These are
// hard errors by design, not silent degradation; the CLI maps them to exit 3.
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// A search that legitimately found nothing (e.g. no prime in range).
class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// A requested construction that cannot exist (e.g. pebble budget too small).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pelab
