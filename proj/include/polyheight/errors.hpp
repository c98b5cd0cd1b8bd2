#ifndef POLYHEIGHT_ERRORS_HPP
#define POLYHEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyheight {

// Domain-level failure with a stable machine-readable kind. The CLI maps the
// kind into the error response and exits with code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw DomainError(kind, message);
}

}  // namespace polyheight

#endif
