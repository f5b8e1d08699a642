#include "hopfcheck/report.hpp"

#include <sstream>

namespace hopfcheck {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

void Report::fail(std::string detail) {
  status = Status::Fail;
  if (details.size() < kMaxDetails) {
    details.push_back(std::move(detail));
  } else {
    ++dropped_;
    if (details.size() == kMaxDetails) details.push_back("... further failures omitted");
  }
}

void Report::note(std::string detail) { details.push_back(std::move(detail)); }

void Report::set_count(const std::string& key, std::int64_t value) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v = value;
      return;
    }
  }
  counts.emplace_back(key, value);
}

void Report::add_count(const std::string& key, std::int64_t delta) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v += delta;
      return;
    }
  }
  counts.emplace_back(key, delta);
}

std::int64_t Report::count(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  return 0;
}

void Report::absorb(const Report& sub) {
  for (const auto& [k, v] : sub.counts) add_count(sub.check + "." + k, v);
  if (sub.status == Status::Fail) {
    for (const auto& d : sub.details) fail(sub.check + ": " + d);
    if (sub.details.empty()) fail(sub.check + ": failed");
  }
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << to_string(status);
  if (!counts.empty()) {
    os << " (";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) os << ", ";
      os << counts[i].first << "=" << counts[i].second;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace hopfcheck
