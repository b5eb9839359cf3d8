// errors.hpp - exception types shared across the library; the CLI maps them
// to its exit codes (invalid spec/config -> 2, engine mismatch -> 3,
// resource guard -> 4).

#ifndef FPT_ERRORS_HPP
#define FPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpt {

// Invalid model, distribution, or run configuration.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// A scenario was dispatched to an engine that cannot handle it.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed the configured work/memory budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpt

#endif  // FPT_ERRORS_HPP
