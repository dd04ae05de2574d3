#pragma once

#include <chrono>
#include <optional>

namespace atlas {

// Installs a wall-clock deadline for the current thread. Long-running exact
// solvers poll `check_deadline()` and throw DeadlineExceeded once it passes.
// Deadlines nest; the innermost scope wins until it is destroyed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace atlas
