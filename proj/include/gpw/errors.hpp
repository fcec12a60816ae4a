#ifndef GPW_ERRORS_HPP
#define GPW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpw {

/// A search ran past its guaranteed exponent bound. Never
/// retried or swallowed: it means either a bug or a counterexample, and the
/// message carries everything needed to reproduce it.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, std::string reproduction)
      : std::runtime_error(what + " [reproduce: " + reproduction + "]"), reproduction_(std::move(reproduction)) {}
  const std::string& reproduction() const { return reproduction_; }

private:
  std::string reproduction_;
};

/// The operation is only defined for torsion-free graph products.
class TorsionPresent : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class PreconditionFailed : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gpw

#endif  // GPW_ERRORS_HPP
