#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace egcf {

// Outcome of a batch of exact checks. A check that cannot be decided at the
// available precision is recorded as a violation, never silently passed.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }

  // Appends per-index outcomes in index order; nullopt means the index passed.
  void absorb(const std::vector<std::optional<std::string>>& outcomes) {
    checked += outcomes.size();
    for (const auto& o : outcomes)
      if (o) violations.push_back(*o);
  }

  void merge(const CheckReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }

  std::string summary() const {
    return name + ": " + (passed() ? "pass" : "FAIL") + " (" + std::to_string(checked) +
           " checked, " + std::to_string(violations.size()) + " violations)";
  }
};

}  // namespace egcf
