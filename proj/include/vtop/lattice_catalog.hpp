#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vtop/lattice.hpp"

namespace vtop::lattices {

/// n-element chain 0 < 1 < ... < n-1.
inline FiniteLattice chain(std::size_t n, std::vector<std::string> names = {}) {
  BoolMatrix m(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = a <= b;
  return validate_lattice(m, std::move(names));
}

/// Powerset of a k-element set; element index is the bitmask.
inline FiniteLattice boolean(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  BoolMatrix m(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "{";
    for (std::size_t i = 0; i < k; ++i)
      if ((a >> i) & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    names.push_back(s + "}");
    for (std::size_t b = 0; b < n; ++b) m[a][b] = (a & ~b) == 0;
  }
  return validate_lattice(m, std::move(names));
}

/// The diamond: bottom, three pairwise incomparable atoms, top.
inline FiniteLattice m3() {
  return lattice_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"bot", "a", "b", "c", "top"});
}

/// The pentagon: bottom < a < b < top, bottom < c < top.
inline FiniteLattice n5() {
  return lattice_from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"bot", "a", "b", "c", "top"});
}

/// Componentwise order on pairs; index of (a, b) is a * |R| + b.
inline FiniteLattice product(const FiniteLattice& L, const FiniteLattice& R) {
  const std::size_t n = L.size() * R.size();
  BoolMatrix m(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = static_cast<Elem>(i / R.size()), b = static_cast<Elem>(i % R.size());
    names.push_back("(" + L.name(a) + "," + R.name(b) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      auto c = static_cast<Elem>(j / R.size()), d = static_cast<Elem>(j % R.size());
      m[i][j] = L.leq(a, c) && R.leq(b, d);
    }
  }
  return validate_lattice(m, std::move(names));
}

/// L stacked below R: every element of L is below every element of R.
inline FiniteLattice ordinal_sum(const FiniteLattice& L, const FiniteLattice& R) {
  const std::size_t n = L.size() + R.size();
  BoolMatrix m(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i < L.size() ? "l" + L.name(static_cast<Elem>(i))
                                 : "u" + R.name(static_cast<Elem>(i - L.size())));
    for (std::size_t j = 0; j < n; ++j) {
      if (i < L.size() && j < L.size())
        m[i][j] = L.leq(static_cast<Elem>(i), static_cast<Elem>(j));
      else if (i >= L.size() && j >= L.size())
        m[i][j] = R.leq(static_cast<Elem>(i - L.size()), static_cast<Elem>(j - L.size()));
      else
        m[i][j] = i < L.size();
    }
  }
  return validate_lattice(m, std::move(names));
}

struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};

/// Built-in catalog: chains, Boolean lattices, M3, N5, a distributive
/// non-chain, non-Boolean lattice, and some products. Both distributive and
/// non-distributive members are present so every predicate is exercised on
/// both sides.
inline std::vector<NamedLattice> catalog() {
  std::vector<NamedLattice> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({"chain" + std::to_string(n), chain(n)});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"boolean" + std::to_string(k), boolean(k)});
  out.push_back({"M3", m3()});
  out.push_back({"N5", n5()});
  out.push_back({"diamond+top", ordinal_sum(boolean(2), chain(1))});
  out.push_back({"chain2xchain3", product(chain(2), chain(3))});
  out.push_back({"chain3xchain3", product(chain(3), chain(3))});
  out.push_back({"chain2xM3", product(chain(2), m3())});
  out.push_back({"chain2xN5", product(chain(2), n5())});
  out.push_back({"chain3xboolean2", product(chain(3), boolean(2))});
  return out;
}

}  // namespace vtop::lattices
