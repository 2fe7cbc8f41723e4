#pragma once

#include <stdexcept>
#include <string>

namespace altknot {

// Broad failure classes; the CLI maps them onto exit codes 2, 1 and 3.
enum class ErrorClass {
  Input,         // malformed text, bad incidence, non-spherical code, I/O
  Precondition,  // a diagram does not satisfy what an operation needs
  Invariant      // a guaranteed property failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& what)
      : std::runtime_error(what), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorClass cls_;
  std::string kind_;
};

inline Error input_error(std::string kind, const std::string& what) {
  return Error(ErrorClass::Input, std::move(kind), what);
}

inline Error precondition_error(std::string kind, const std::string& what) {
  return Error(ErrorClass::Precondition, std::move(kind), what);
}

inline Error invariant_error(std::string kind, const std::string& what) {
  return Error(ErrorClass::Invariant, std::move(kind), what);
}

}  // namespace altknot
