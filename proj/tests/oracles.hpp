#pragma once

// Independent reference implementations used to derive expected values.
// They follow the definitions literally (arbitrary finite subsets, strings of
// subsets, full table spaces) and share nothing with the library beyond the
// order, join, meet and tensor lookups of already validated objects.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vtop/vtop.hpp"

namespace oracle {

using vtop::ClosureStructure;
using vtop::Elem;
using vtop::FiniteLattice;
using vtop::Quantale;
using vtop::Subset;

inline std::vector<Elem> elements_of(std::uint64_t mask) {
  std::vector<Elem> out;
  for (Elem i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

/// Least upper bound by scanning all upper bounds.
inline Elem sup(const FiniteLattice& L, const std::vector<Elem>& s) {
  std::vector<Elem> ub;
  for (Elem u = 0; u < L.size(); ++u) {
    bool above = true;
    for (Elem x : s) above = above && L.leq(x, u);
    if (above) ub.push_back(u);
  }
  for (Elem u : ub) {
    bool least = true;
    for (Elem w : ub) least = least && L.leq(u, w);
    if (least) return u;
  }
  throw std::logic_error("no supremum");
}

inline Elem inf(const FiniteLattice& L, const std::vector<Elem>& s) {
  std::vector<Elem> lb;
  for (Elem u = 0; u < L.size(); ++u) {
    bool below = true;
    for (Elem x : s) below = below && L.leq(u, x);
    if (below) lb.push_back(u);
  }
  for (Elem u : lb) {
    bool greatest = true;
    for (Elem w : lb) greatest = greatest && L.leq(w, u);
    if (greatest) return u;
  }
  throw std::logic_error("no infimum");
}

/// p <= sup S implies p <= s for some s in S, for every finite S (S empty
/// rules out bottom).
inline bool coprime(const FiniteLattice& L, Elem p) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << L.size()); ++m) {
    const auto s = elements_of(m);
    if (!L.leq(p, sup(L, s))) continue;
    bool some = false;
    for (Elem x : s) some = some || L.leq(p, x);
    if (!some) return false;
  }
  return true;
}

inline bool sup_generated(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    std::vector<Elem> below;
    for (Elem p = 0; p < L.size(); ++p)
      if (L.leq(p, a) && coprime(L, p)) below.push_back(p);
    if (sup(L, below) != a) return false;
  }
  return true;
}

inline bool coframe(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      for (Elem z = 0; z < L.size(); ++z)
        if (sup(L, {x, inf(L, {y, z})}) != inf(L, {sup(L, {x, y}), sup(L, {x, z})})) return false;
  return true;
}

inline bool totally_below(const FiniteLattice& L, Elem x, Elem a) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << L.size()); ++m) {
    const auto s = elements_of(m);
    if (!L.leq(a, sup(L, s))) continue;
    bool some = false;
    for (Elem b : s) some = some || L.leq(x, b);
    if (!some) return false;
  }
  return true;
}

inline bool ccd(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    std::vector<Elem> below;
    for (Elem x = 0; x < L.size(); ++x)
      if (oracle::totally_below(L, x, a)) below.push_back(x);
    if (sup(L, below) != a) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quantales

using JoinTable = std::vector<Elem>;

inline JoinTable join_table(const FiniteLattice& L) {
  const std::size_t n = L.size();
  JoinTable j(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) j[a * n + b] = sup(L, {a, b});
  return j;
}

inline bool quantale_laws(const FiniteLattice& L, const JoinTable& J, const std::vector<Elem>& t, Elem k) {
  const std::size_t n = L.size();
  auto T = [&](Elem a, Elem b) { return t[a * n + b]; };
  auto S = [&](Elem a, Elem b) { return J[a * n + b]; };
  for (Elem v = 0; v < n; ++v)
    if (T(k, v) != v || T(v, k) != v) return false;
  for (Elem v = 0; v < n; ++v)
    if (T(L.bottom(), v) != L.bottom() || T(v, L.bottom()) != L.bottom()) return false;
  for (Elem u = 0; u < n; ++u)
    for (Elem u2 = 0; u2 < n; ++u2)
      for (Elem v = 0; v < n; ++v) {
        if (T(S(u, u2), v) != S(T(u, v), T(u2, v))) return false;
        if (T(v, S(u, u2)) != S(T(v, u), T(v, u2))) return false;
      }
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      for (Elem w = 0; w < n; ++w)
        if (T(T(u, v), w) != T(u, T(v, w))) return false;
  return true;
}

/// Every (tensor, unit) pair. For |L| <= 3 all n^(n^2) tables are tried; for
/// larger lattices the rows and columns of bottom and of the unit are fixed
/// first (both are forced by the laws) and the rest is tried exhaustively.
inline std::vector<std::pair<std::vector<Elem>, Elem>> all_quantales(const FiniteLattice& L) {
  const std::size_t n = L.size();
  const auto J = join_table(L);
  std::vector<std::pair<std::vector<Elem>, Elem>> out;
  if (n <= 3) {
    std::vector<Elem> t(n * n, 0);
    while (true) {
      for (Elem k = 0; k < n; ++k)
        if (quantale_laws(L, J, t, k)) out.emplace_back(t, k);
      std::size_t i = 0;
      while (i < t.size() && ++t[i] == n) t[i++] = 0;
      if (i == t.size()) break;
    }
    return out;
  }
  for (Elem k = 0; k < n; ++k) {
    if (k == L.bottom()) continue;
    std::vector<Elem> t(n * n, 0);
    std::vector<std::size_t> free;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == L.bottom() || b == L.bottom()) t[a * n + b] = L.bottom();
        else if (a == k) t[a * n + b] = b;
        else if (b == k) t[a * n + b] = a;
        else free.push_back(a * n + b);
      }
    for (auto i : free) t[i] = 0;
    while (true) {
      if (quantale_laws(L, J, t, k)) out.emplace_back(t, k);
      std::size_t i = 0;
      while (i < free.size() && ++t[free[i]] == n) t[free[i++]] = 0;
      if (i == free.size()) break;
    }
  }
  return out;
}

inline Elem residual(const Quantale& q, Elem v, Elem w) {
  std::vector<Elem> us;
  for (Elem u = 0; u < q.size(); ++u)
    if (q.leq(q.tensor(u, v), w)) us.push_back(u);
  return sup(q.lattice(), us);
}

// ---------------------------------------------------------------------------
// Closure structures

inline std::vector<std::size_t> points_of(Subset a, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if ((a >> x) & 1u) out.push_back(x);
  return out;
}

inline bool R(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (Subset a = 0; a < c.subsets(); ++a)
    for (auto x : points_of(a, c.points()))
      if (!q.leq(q.unit(), c(a, x))) return false;
  return true;
}

inline bool T(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = 0; b < c.subsets(); ++b) {
      std::vector<Elem> vals;
      for (auto y : points_of(b, c.points())) vals.push_back(c(a, y));
      const Elem m = inf(q.lattice(), vals);
      for (std::size_t x = 0; x < c.points(); ++x)
        if (!q.leq(q.tensor(m, c(b, x)), c(a, x))) return false;
    }
  return true;
}

inline bool A(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (std::size_t x = 0; x < c.points(); ++x)
    if (c(0, x) != q.bottom()) return false;
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = 0; b < c.subsets(); ++b)
      for (std::size_t x = 0; x < c.points(); ++x)
        if (c(a | b, x) != sup(q.lattice(), {c(a, x), c(b, x)})) return false;
  return true;
}

inline bool monotone(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = 0; b < c.subsets(); ++b)
      if ((b & ~a) == 0)
        for (std::size_t x = 0; x < c.points(); ++x)
          if (!q.leq(c(b, x), c(a, x))) return false;
  return true;
}

inline ClosureStructure bar(const ClosureStructure& c, bool coprime_only = false) {
  const auto& q = c.quantale();
  ClosureStructure out(c.quantale_ptr(), c.points(), c.point_names());
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < c.points(); ++x) {
      std::vector<Elem> terms;
      for (Elem v = 0; v < q.size(); ++v) {
        if (coprime_only && !coprime(q.lattice(), v)) continue;
        Subset level = 0;
        for (std::size_t z = 0; z < c.points(); ++z)
          if (q.leq(v, c(a, z))) level |= Subset{1} << z;
        terms.push_back(q.tensor(v, c(level, x)));
      }
      out.set(a, x, sup(q.lattice(), terms));
    }
  return out;
}

/// The core over literal strings (A_1, ..., A_m) of subsets with union A,
/// of every length up to the number of subsets; parts may be empty and may
/// repeat. The empty string covers only the empty set.
inline ClosureStructure core_strings(const ClosureStructure& c) {
  const auto& q = c.quantale();
  const std::size_t subsets = c.subsets();
  ClosureStructure out(c.quantale_ptr(), c.points(), c.point_names());
  for (auto& v : out.mutable_table()) v = q.top();
  std::vector<Subset> word;
  std::function<void(Subset)> extend = [&](Subset covered) {
    for (std::size_t x = 0; x < c.points(); ++x) {
      std::vector<Elem> vals;
      for (Subset part : word) vals.push_back(c(part, x));
      out.set(covered, x, q.meet(out(covered, x), sup(q.lattice(), vals)));
    }
    if (word.size() == subsets) return;
    for (Subset part = 0; part < subsets; ++part) {
      word.push_back(part);
      extend(covered | part);
      word.pop_back();
    }
  };
  extend(0);
  return out;
}

/// The core over sets of subsets, with empty parts allowed (no pruning).
inline ClosureStructure core_unpruned(const ClosureStructure& c) {
  const auto& q = c.quantale();
  const std::size_t subsets = c.subsets();
  ClosureStructure out(c.quantale_ptr(), c.points(), c.point_names());
  for (auto& v : out.mutable_table()) v = q.top();
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    Subset covered = 0;
    std::vector<Subset> parts;
    for (Subset p = 0; p < subsets; ++p)
      if ((fam >> p) & 1u) {
        covered |= p;
        parts.push_back(p);
      }
    for (std::size_t x = 0; x < c.points(); ++x) {
      std::vector<Elem> vals;
      for (Subset p : parts) vals.push_back(c(p, x));
      out.set(covered, x, q.meet(out(covered, x), sup(q.lattice(), vals)));
    }
  }
  return out;
}

inline bool leq(const ClosureStructure& c, const ClosureStructure& d) {
  for (std::size_t i = 0; i < c.table().size(); ++i)
    if (!c.quantale().leq(c.table()[i], d.table()[i])) return false;
  return true;
}

/// Visits every table PX -> V^X.
inline void each_table(const vtop::QuantalePtr& q, std::size_t n, const std::function<void(const ClosureStructure&)>& fn) {
  ClosureStructure c(q, n);
  auto& t = c.mutable_table();
  while (true) {
    fn(c);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == q->size()) t[i++] = 0;
    if (i == t.size()) break;
  }
}

/// The largest table among `candidates` that lies below c, if one exists.
inline std::optional<ClosureStructure> maximum_below(const ClosureStructure& c,
                                                     const std::vector<ClosureStructure>& candidates) {
  std::vector<const ClosureStructure*> below;
  for (const auto& d : candidates)
    if (leq(d, c)) below.push_back(&d);
  for (const auto* d : below) {
    bool top = true;
    for (const auto* e : below) top = top && leq(*e, *d);
    if (top) return *d;
  }
  return std::nullopt;
}

}  // namespace oracle
