#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vtop/lattice.hpp"
#include "vtop/subset.hpp"

namespace vtop {

/// A concrete counterexample: the axiom id, the subsets and point involved,
/// and the two sides of the failed comparison.
struct Witness {
  std::string axiom;
  Subset a = 0;
  Subset b = 0;
  std::size_t x = 0;
  Elem lhs = 0;
  Elem rhs = 0;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckItem {
  std::string id;
  bool pass = true;
  std::optional<Witness> witness;  // always present when !pass
  std::string note;
};

struct CheckReport {
  std::string label;
  std::vector<CheckItem> items;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
  }
  const CheckItem* find(const std::string& id) const {
    auto it = std::find_if(items.begin(), items.end(), [&](const CheckItem& i) { return i.id == id; });
    return it == items.end() ? nullptr : &*it;
  }
  /// Verdict for one item; an absent id is a programming error and counts as failure.
  bool pass(const std::string& id) const {
    const auto* item = find(id);
    return item != nullptr && item->pass;
  }
  void add(std::string id, const std::optional<Witness>& failure, std::string note = {}) {
    items.push_back({std::move(id), !failure.has_value(), failure, std::move(note)});
  }
  void add_bool(std::string id, bool ok, Witness w, std::string note = {}) {
    if (ok)
      items.push_back({std::move(id), true, std::nullopt, std::move(note)});
    else
      items.push_back({std::move(id), false, std::move(w), std::move(note)});
  }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (auto item : other.items) {
      item.id = prefix + item.id;
      items.push_back(std::move(item));
    }
  }
};

}  // namespace vtop
