#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hopfcheck {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

/// Outcome of one verification. Counts keep insertion order so that printed
/// reports are deterministic.
struct Report {
  std::string check;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<std::string> details;
  double ms = 0.0;

  static constexpr std::size_t kMaxDetails = 20;

  explicit Report(std::string name = {}) : check(std::move(name)) {}

  bool passed() const { return status == Status::Pass; }

  /// Records a failure; details beyond kMaxDetails are counted but dropped.
  void fail(std::string detail);
  void note(std::string detail);
  void set_count(const std::string& key, std::int64_t value);
  void add_count(const std::string& key, std::int64_t delta = 1);
  std::int64_t count(const std::string& key) const;

  /// Folds another report in as a sub-check.
  void absorb(const Report& sub);

  std::string summary() const;

 private:
  std::size_t dropped_ = 0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hopfcheck
