#pragma once

#include <chrono>
#include <optional>

#include "gccaut/errors.hpp"

namespace gccaut {

/// Cooperative wall-clock budget. Long-running kernels poll `check()`.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}

  bool expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }
  void check() const {
    if (expired()) throw BudgetExceeded("wall-time budget exhausted");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

inline void poll(const Deadline* d) {
  if (d) d->check();
}

}  // namespace gccaut
