#pragma once

#include <stdexcept>
#include <string>

namespace arithmat {

/// A computation was refused because the ground list exceeds a configured cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::length_error(what + ": ground size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// An operation's precondition on its arguments does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace arithmat
