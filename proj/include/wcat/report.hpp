#pragma once

#include <string>
#include <vector>

namespace wcat {

// Validation outcome: ok, or a list of human-readable violations.
struct Report {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& v : other.violations) fail(prefix.empty() ? v : prefix + ": " + v);
  }
  std::string text() const {
    if (ok) return "ok";
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v;
    }
    return out;
  }
};

}  // namespace wcat
