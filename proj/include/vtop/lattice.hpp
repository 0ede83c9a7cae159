#pragma once

// Finite complete lattices given by an explicit order relation, with the
// order-theoretic predicates used to classify quantales: coprimes,
// sup-generation by coprimes, the coframe law, the totally-below and
// way-below relations, constructive complete distributivity, and the
// embedding into the powerset of coprimes.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vtop/caps.hpp"
#include "vtop/error.hpp"

namespace vtop {

/// Index of a lattice element.
using Elem = std::uint8_t;
/// A set of lattice elements, bit e set iff e is a member.
using ElemSet = std::uint64_t;

inline constexpr std::size_t kMaxLatticeSize = 64;

constexpr bool has(ElemSet s, std::size_t e) { return (s >> e) & 1u; }
constexpr ElemSet elem_bit(std::size_t e) { return ElemSet{1} << e; }

using BoolMatrix = std::vector<std::vector<bool>>;

class FiniteLattice;
FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> names = {});

/// An immutable finite lattice. Only `validate_lattice` constructs one, so a
/// FiniteLattice value always satisfies the lattice laws.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return n_; }

  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Join of an arbitrary subset; the empty join is bottom.
  Elem join_of(ElemSet s) const {
    Elem acc = bottom_;
    for (; s != 0; s &= s - 1) acc = join(acc, static_cast<Elem>(std::countr_zero(s)));
    return acc;
  }

  /// Meet of an arbitrary subset; the empty meet is top.
  Elem meet_of(ElemSet s) const {
    Elem acc = top_;
    for (; s != 0; s &= s - 1) acc = meet(acc, static_cast<Elem>(std::countr_zero(s)));
    return acc;
  }

  ElemSet up_set(Elem a) const { return up_[a]; }
  ElemSet down_set(Elem a) const { return down_[a]; }
  ElemSet all() const { return n_ == 64 ? ~ElemSet{0} : (ElemSet{1} << n_) - 1; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem a) const { return names_[a]; }

  std::optional<Elem> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Elem>(it - names_.begin());
  }

  BoolMatrix leq_matrix() const {
    BoolMatrix m(n_, std::vector<bool>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) m[a][b] = leq(static_cast<Elem>(a), static_cast<Elem>(b));
    return m;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_ && a.names_ == b.names_;
  }

 private:
  friend FiniteLattice validate_lattice(const BoolMatrix&, std::vector<std::string>);
  FiniteLattice() = default;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_, meet_;
  std::vector<ElemSet> up_, down_;
  std::vector<std::string> names_;
  Elem bottom_ = 0, top_ = 0;
};

inline FiniteLattice validate_lattice(const BoolMatrix& leq, std::vector<std::string> names) {
  const std::size_t n = leq.size();
  if (n == 0) throw Error(ErrorKind::NotAPartialOrder, "lattice must have at least one element");
  if (n > kMaxLatticeSize) size_limit("lattice size", n, kMaxLatticeSize);
  for (const auto& row : leq)
    if (row.size() != n) throw Error(ErrorKind::NotAPartialOrder, "order relation is not square");
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw Error(ErrorKind::NotAPartialOrder, "names do not match lattice size");

  for (std::size_t a = 0; a < n; ++a)
    if (!leq[a][a])
      throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + names[a], {a});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a])
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric at (" + names[a] + "," + names[b] + ")", {a, b});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw Error(ErrorKind::NotAPartialOrder,
                      "not transitive at (" + names[a] + "," + names[b] + "," + names[c] + ")",
                      {a, b, c});

  FiniteLattice L;
  L.n_ = n;
  L.names_ = std::move(names);
  L.leq_.assign(n * n, 0);
  L.up_.assign(n, 0);
  L.down_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b]) {
        L.leq_[a * n + b] = 1;
        L.up_[a] |= elem_bit(b);
        L.down_[b] |= elem_bit(a);
      }

  // The least element of `bounds`, if any: the one whose up-set contains all of them.
  auto least = [&](ElemSet bounds) -> std::optional<Elem> {
    for (ElemSet s = bounds; s != 0; s &= s - 1) {
      auto e = static_cast<Elem>(std::countr_zero(s));
      if ((bounds & ~L.up_[e]) == 0) return e;
    }
    return std::nullopt;
  };
  auto greatest = [&](ElemSet bounds) -> std::optional<Elem> {
    for (ElemSet s = bounds; s != 0; s &= s - 1) {
      auto e = static_cast<Elem>(std::countr_zero(s));
      if ((bounds & ~L.down_[e]) == 0) return e;
    }
    return std::nullopt;
  };

  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto j = least(L.up_[a] & L.up_[b]);
      if (!j)
        throw Error(ErrorKind::MissingJoin,
                    "no least upper bound for (" + L.names_[a] + "," + L.names_[b] + ")", {a, b});
      auto m = greatest(L.down_[a] & L.down_[b]);
      if (!m)
        throw Error(ErrorKind::MissingMeet,
                    "no greatest lower bound for (" + L.names_[a] + "," + L.names_[b] + ")", {a, b});
      L.join_[a * n + b] = *j;
      L.meet_[a * n + b] = *m;
    }
  // With all binary joins and meets, the whole carrier has a least and a greatest element.
  L.bottom_ = *least(L.all());
  L.top_ = *greatest(L.all());
  return L;
}

/// Builds the reflexive-transitive closure of the given pairs (a <= b) and
/// validates it. Convenient for Hasse-style input.
inline FiniteLattice lattice_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        std::vector<std::string> names = {}) {
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::OutOfRange, "pair outside the carrier", {a, b});
    m[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return validate_lattice(m, std::move(names));
}

inline Elem join(const FiniteLattice& L, ElemSet s) { return L.join_of(s); }
inline Elem meet(const FiniteLattice& L, ElemSet s) { return L.meet_of(s); }

// ---------------------------------------------------------------------------
// Coprimes and sup-generation

/// p is coprime iff p > bottom and p <= u v v implies p <= u or p <= v.
/// Bottom is never coprime.
inline bool is_coprime(const FiniteLattice& L, Elem p) {
  if (p == L.bottom()) return false;
  const auto n = L.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      auto eu = static_cast<Elem>(u), ev = static_cast<Elem>(v);
      if (L.leq(p, L.join(eu, ev)) && !L.leq(p, eu) && !L.leq(p, ev)) return false;
    }
  return true;
}

inline ElemSet coprimes(const FiniteLattice& L) {
  ElemSet out = 0;
  for (std::size_t p = 0; p < L.size(); ++p)
    if (is_coprime(L, static_cast<Elem>(p))) out |= elem_bit(p);
  return out;
}

/// Outcome of a lattice predicate: verdict plus the first offending elements.
struct LatticeVerdict {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return holds; }
};

struct SupGeneration {
  /// Every a equals the join of the coprimes below it; witness is the first a that does not.
  LatticeVerdict by_joins;
  /// Coprimes separate the order: (for all coprime p: p <= x => p <= y) => x <= y.
  /// Witness is the first pair (x, y) that is not separated.
  LatticeVerdict by_separation;

  bool holds() const noexcept { return by_joins.holds; }
};

inline SupGeneration is_sup_generated_by_coprimes(const FiniteLattice& L) {
  SupGeneration out;
  const ElemSet cp = coprimes(L);
  const auto n = L.size();
  for (std::size_t a = 0; a < n; ++a) {
    auto e = static_cast<Elem>(a);
    if (L.join_of(cp & L.down_set(e)) != e) {
      out.by_joins = {false, {e}};
      break;
    }
  }
  for (std::size_t x = 0; x < n && out.by_separation.holds; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      bool separated = (cp & L.down_set(ex) & ~L.down_set(ey)) != 0;
      if (!L.leq(ex, ey) && !separated) {
        out.by_separation = {false, {ex, ey}};
        break;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Distributivity

/// Finite lattices have only finite infima, so the coframe law reduces to
/// x v (y ^ z) = (x v y) ^ (x v z). Witness is the first failing (x, y, z).
inline LatticeVerdict is_coframe(const FiniteLattice& L) {
  const auto n = L.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y), ez = static_cast<Elem>(z);
        if (L.join(ex, L.meet(ey, ez)) != L.meet(L.join(ex, ey), L.join(ex, ez)))
          return {false, {ex, ey, ez}};
      }
  return {};
}

// ---------------------------------------------------------------------------
// Totally below and way below

namespace detail {

inline void require_totally_below_cap(const FiniteLattice& L, const Caps& caps) {
  if (L.size() > caps.totally_below_elements)
    size_limit("lattice size for subset enumeration", L.size(), caps.totally_below_elements);
}

}  // namespace detail

/// x << a: every B with a <= join(B) contains some b >= x. Enumerates all 2^|L| subsets.
inline bool totally_below(const FiniteLattice& L, Elem x, Elem a, const Caps& caps = {}) {
  detail::require_totally_below_cap(L, caps);
  const ElemSet above_x = L.up_set(x);
  const ElemSet limit = L.all();
  for (ElemSet b = 0;; ++b) {
    if ((b & above_x) == 0 && L.leq(a, L.join_of(b))) return false;
    if (b == limit) break;
  }
  return true;
}

/// Full n x n table of the totally-below relation, row x, column a.
/// One pass over all subsets: a subset B refutes x << a exactly when
/// a <= join(B) and x lies outside the down-closure of B.
inline std::vector<std::vector<bool>> totally_below_table(const FiniteLattice& L, const Caps& caps = {}) {
  detail::require_totally_below_cap(L, caps);
  const auto n = L.size();
  const ElemSet limit = L.all();
  std::vector<Elem> joins(static_cast<std::size_t>(limit) + 1);
  std::vector<ElemSet> downs(joins.size());
  std::vector<ElemSet> refuted(n, 0);  // refuted[a] = set of x with not(x << a)
  joins[0] = L.bottom();
  downs[0] = 0;
  for (ElemSet b = 0;; ++b) {
    if (b != 0) {
      ElemSet rest = b & (b - 1);
      auto low = static_cast<Elem>(std::countr_zero(b));
      joins[b] = L.join(joins[rest], low);
      downs[b] = downs[rest] | L.down_set(low);
    }
    for (std::size_t a = 0; a < n; ++a)
      if (L.leq(static_cast<Elem>(a), joins[b])) refuted[a] |= ~downs[b] & limit;
    if (b == limit) break;
  }
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a) table[x][a] = !has(refuted[a], x);
  return table;
}

/// In a finite lattice every directed subset contains its own join, so x is
/// way below a exactly when x <= a.
inline bool way_below(const FiniteLattice& L, Elem x, Elem a) { return L.leq(x, a); }

/// Literal way-below: for every nonempty directed D with a <= join(D), some d in D is >= x.
inline bool way_below_by_directed_sets(const FiniteLattice& L, Elem x, Elem a, const Caps& caps = {}) {
  detail::require_totally_below_cap(L, caps);
  const ElemSet limit = L.all();
  for (ElemSet d = 1;; ++d) {
    bool directed = true;
    for (ElemSet s = d; s != 0 && directed; s &= s - 1) {
      auto u = static_cast<Elem>(std::countr_zero(s));
      for (ElemSet t = d; t != 0; t &= t - 1) {
        auto v = static_cast<Elem>(std::countr_zero(t));
        if ((d & L.up_set(u) & L.up_set(v)) == 0) {
          directed = false;
          break;
        }
      }
    }
    if (directed && L.leq(a, L.join_of(d)) && (d & L.up_set(x)) == 0) return false;
    if (d == limit) break;
  }
  return true;
}

/// Every a is the join of the elements totally below it. Witness is the first a that is not.
inline LatticeVerdict is_ccd(const FiniteLattice& L, const Caps& caps = {}) {
  auto tb = totally_below_table(L, caps);
  const auto n = L.size();
  for (std::size_t a = 0; a < n; ++a) {
    ElemSet below = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (tb[x][a]) below |= elem_bit(x);
    if (L.join_of(below) != a) return {false, {static_cast<Elem>(a)}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Embedding into the powerset of coprimes

struct SpatialEmbedding {
  ElemSet coprime_set = 0;
  /// chi[x] = coprimes below x.
  std::vector<ElemSet> chi;
  bool injective = true;
  bool preserves_binary_meets = true;
  bool preserves_binary_joins = true;
  /// Per element p: the characteristic map of the up-set of p preserves all
  /// meets (binary and empty) / finite joins (binary and empty).
  std::vector<bool> chi_p_preserves_meets;
  std::vector<bool> chi_p_preserves_finite_joins;
};

inline SpatialEmbedding spatial_embedding(const FiniteLattice& L) {
  SpatialEmbedding out;
  const auto n = L.size();
  out.coprime_set = coprimes(L);
  out.chi.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.chi[x] = out.coprime_set & L.down_set(static_cast<Elem>(x));

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      if (x < y && out.chi[x] == out.chi[y]) out.injective = false;
      if (out.chi[L.meet(ex, ey)] != (out.chi[x] & out.chi[y])) out.preserves_binary_meets = false;
      if (out.chi[L.join(ex, ey)] != (out.chi[x] | out.chi[y])) out.preserves_binary_joins = false;
    }

  out.chi_p_preserves_meets.assign(n, true);
  out.chi_p_preserves_finite_joins.assign(n, true);
  for (std::size_t p = 0; p < n; ++p) {
    auto ep = static_cast<Elem>(p);
    auto chi_p = [&](Elem x) { return L.leq(ep, x); };
    bool meets = chi_p(L.top());
    bool joins = !chi_p(L.bottom());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
        if (chi_p(L.meet(ex, ey)) != (chi_p(ex) && chi_p(ey))) meets = false;
        if (chi_p(L.join(ex, ey)) != (chi_p(ex) || chi_p(ey))) joins = false;
      }
    out.chi_p_preserves_meets[p] = meets;
    out.chi_p_preserves_finite_joins[p] = joins;
  }
  return out;
}

}  // namespace vtop
