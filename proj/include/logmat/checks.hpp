#pragma once

#include <string>
#include <vector>

namespace logmat {

/// One named pass/fail line inside a structured check report.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
};

}  // namespace logmat
