#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace vform {

/// Thrown when a build step runs past its configured time budget.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Cooperative wall-clock budget. Long-running builders poll expired()
/// between outer-loop iterations and bail out with BudgetExceeded.
class Deadline {
public:
  Deadline() : unlimited_(true) {}
  static Deadline after(double seconds) {
    Deadline d;
    d.unlimited_ = false;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const {
    return !unlimited_ && std::chrono::steady_clock::now() > end_;
  }
  void check(const char* stage) const {
    if (expired()) throw BudgetExceeded(std::string("time budget exceeded in ") + stage);
  }

private:
  bool unlimited_;
  std::chrono::steady_clock::time_point end_;
};

inline double wall_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

} // namespace vform
