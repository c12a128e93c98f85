#ifndef PREMON_ERROR_HPP_
#define PREMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace premon {

// Library-wide exception. `kind` is a stable machine-readable tag
// ("size-cap-exceeded", "not-singular", ...); the what() string embeds it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace premon

#endif  // PREMON_ERROR_HPP_
