#pragma once

#include <algorithm>
#include <vector>

#include "vtop/quantale.hpp"

namespace vtop {

namespace detail {

class QuantaleSearch {
 public:
  QuantaleSearch(const FiniteLattice& L, std::vector<Quantale>& out) : L_(L), n_(L.size()), out_(out) {}

  void run_for_unit(Elem k) {
    table_.assign(n_ * n_, kUnset);
    const Elem bot = L_.bottom();
    for (std::size_t v = 0; v < n_; ++v) {
      if (!fix(bot, v, bot) || !fix(v, bot, bot)) return;
      if (!fix(k, v, static_cast<Elem>(v)) || !fix(v, k, static_cast<Elem>(v))) return;
    }
    free_.clear();
    for (std::size_t i = 0; i < n_ * n_; ++i)
      if (table_[i] == kUnset) free_.push_back(i);
    unit_ = k;
    descend(0);
  }

 private:
  static constexpr Elem kUnset = 0xFF;

  bool fix(std::size_t a, std::size_t b, Elem v) {
    Elem& cell = table_[a * n_ + b];
    if (cell != kUnset && cell != v) return false;
    cell = v;
    return true;
  }

  Elem at(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

  // Join preservation constraints touching cell (u, v) whose operands are all assigned.
  bool consistent(std::size_t u, std::size_t v) const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) {
        const std::size_t j = L_.join(static_cast<Elem>(a), static_cast<Elem>(b));
        if (a == u || b == u || j == u) {
          Elem x = at(a, v), y = at(b, v), z = at(j, v);
          if (x != kUnset && y != kUnset && z != kUnset && z != L_.join(x, y)) return false;
        }
        if (a == v || b == v || j == v) {
          Elem x = at(u, a), y = at(u, b), z = at(u, j);
          if (x != kUnset && y != kUnset && z != kUnset && z != L_.join(x, y)) return false;
        }
      }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == free_.size()) {
      if (!quantale_violation(L_, table_, unit_)) out_.push_back(validate_quantale(L_, table_, unit_));
      return;
    }
    const std::size_t cell = free_[depth];
    for (std::size_t val = 0; val < n_; ++val) {
      table_[cell] = static_cast<Elem>(val);
      if (consistent(cell / n_, cell % n_)) descend(depth + 1);
    }
    table_[cell] = kUnset;
  }

  const FiniteLattice& L_;
  std::size_t n_;
  std::vector<Quantale>& out_;
  std::vector<Elem> table_;
  std::vector<std::size_t> free_;
  Elem unit_ = 0;
};

}  // namespace detail

/// All unital quantale structures on L, ordered lexicographically by tensor
/// table and truncated to max_results. The unit is fixed first; the
/// remaining cells are filled row by row with join preservation checked as
/// soon as each constraint's cells are all known.
inline std::vector<Quantale> enumerate_quantales(const FiniteLattice& L, std::size_t max_results,
                                                 const Caps& caps = {}) {
  if (L.size() > caps.enumerate_elements) size_limit("lattice size for enumeration", L.size(), caps.enumerate_elements);
  std::vector<Quantale> out;
  detail::QuantaleSearch search(L, out);
  for (std::size_t k = 0; k < L.size(); ++k) search.run_for_unit(static_cast<Elem>(k));
  std::sort(out.begin(), out.end(), [](const Quantale& a, const Quantale& b) {
    if (a.tensor_table() != b.tensor_table()) return a.tensor_table() < b.tensor_table();
    return a.unit() < b.unit();
  });
  if (out.size() > max_results) out.erase(out.begin() + static_cast<std::ptrdiff_t>(max_results), out.end());
  return out;
}

}  // namespace vtop
