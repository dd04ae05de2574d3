#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad weights, duplicate edges, parse failures.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exact computation was refused because the instance exceeds its size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// The per-thread wall-clock deadline expired inside a long computation.
class DeadlineExceeded : public Error {
 public:
  DeadlineExceeded() : Error("wall-clock deadline exceeded") {}
};

inline void require_cap(const char* what, std::size_t size, std::size_t cap) {
  if (size > cap) throw CapExceeded(what, size, cap);
}

}  // namespace atlas
