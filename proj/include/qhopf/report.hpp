#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/tensor.hpp"

namespace qhopf {

// One verified identity. `anchor` quotes the equation tag being checked
// (e.g. "(q3)"), empty for bookkeeping checks with no display of their own.
// A failing entry carries the first differing basis tuple and both values;
// `note` carries informational findings that are not pass/fail verdicts.
struct CheckEntry {
  std::string id;
  std::string anchor;
  bool passed = false;
  std::optional<Witness> witness;
  std::string note;
};

struct Report {
  std::string title;
  std::vector<CheckEntry> entries;

  bool ok() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }

  void add(std::string id, std::string anchor, bool passed,
           std::optional<Witness> w = std::nullopt, std::string note = {}) {
    entries.push_back({std::move(id), std::move(anchor), passed, std::move(w), std::move(note)});
  }

  // Record lhs == rhs (legs aligned by name); on mismatch the entry keeps the
  // first differing index as witness.
  void eq(std::string id, std::string anchor, const Tensor& lhs, const Tensor& rhs) {
    auto w = lhs.diff(rhs);
    add(std::move(id), std::move(anchor), !w.has_value(), std::move(w));
  }

  // Mark a check that could not run because a prerequisite failed.
  void blocked(std::string id, std::string anchor, std::string why) {
    entries.push_back({std::move(id), std::move(anchor), false, std::nullopt,
                       "not evaluated: " + std::move(why)});
  }

  void absorb(const Report& sub, const std::string& prefix) {
    for (const auto& e : sub.entries) {
      CheckEntry c = e;
      c.id = prefix + "." + c.id;
      entries.push_back(std::move(c));
    }
  }

  const CheckEntry* find(std::string_view id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

}  // namespace qhopf
