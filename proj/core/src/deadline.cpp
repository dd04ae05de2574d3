#include "atlas/deadline.hpp"

#include "atlas/error.hpp"

namespace atlas {
namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
thread_local unsigned poll_counter = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget) : previous_(current_deadline) {
  current_deadline = std::chrono::steady_clock::now() + budget;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = previous_; }

void check_deadline() {
  if (!current_deadline) return;
  // Reading the clock on every poll is measurable inside tight search loops.
  if ((++poll_counter & 0x3FFU) != 0) return;
  if (std::chrono::steady_clock::now() > *current_deadline) throw DeadlineExceeded();
}

}  // namespace atlas
