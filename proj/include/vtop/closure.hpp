#pragma once

// Quantale-valued closure structures on a finite set X: a table c assigning
// to every subset A of X and point x a value (cA)(x). The type assumes no
// axiom; reflexivity (R), transitivity (T), finite additivity (A) and
// continuity (C) are checked by the operations below and reported with
// witnesses.

#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vtop/check_report.hpp"
#include "vtop/quantale.hpp"
#include "vtop/subset.hpp"

namespace vtop {

inline constexpr std::size_t kMaxStructurePoints = 12;

class ClosureStructure {
 public:
  /// All entries bottom.
  ClosureStructure(QuantalePtr q, std::size_t n, std::vector<std::string> point_names = {})
      : q_(std::move(q)), n_(n), names_(std::move(point_names)) {
    if (!q_) throw Error(ErrorKind::PreconditionFailed, "closure structure needs a quantale");
    if (n_ > kMaxStructurePoints) size_limit("base set size", n_, kMaxStructurePoints);
    table_.assign((std::size_t{1} << n_) * n_, q_->bottom());
    if (names_.empty())
      for (std::size_t x = 0; x < n_; ++x) names_.push_back(std::to_string(x));
    if (names_.size() != n_) throw Error(ErrorKind::PreconditionFailed, "point names do not match base set size");
  }

  /// Row-major table: entry A * n + x is (cA)(x).
  ClosureStructure(QuantalePtr q, std::size_t n, std::vector<Elem> table, std::vector<std::string> point_names = {})
      : ClosureStructure(std::move(q), n, std::move(point_names)) {
    if (table.size() != table_.size())
      throw Error(ErrorKind::OutOfRange, "closure table must have 2^n * n entries", {table.size(), table_.size()});
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] >= q_->size()) throw Error(ErrorKind::OutOfRange, "closure value outside the quantale", {i});
    table_ = std::move(table);
  }

  const Quantale& quantale() const noexcept { return *q_; }
  const QuantalePtr& quantale_ptr() const noexcept { return q_; }
  std::size_t points() const noexcept { return n_; }
  std::size_t subsets() const noexcept { return std::size_t{1} << n_; }
  Subset everything() const noexcept { return full_set(n_); }
  const std::vector<std::string>& point_names() const noexcept { return names_; }

  Elem operator()(Subset a, std::size_t x) const { return table_[a * n_ + x]; }
  Elem at(Subset a, std::size_t x) const { return table_[a * n_ + x]; }
  void set(Subset a, std::size_t x, Elem v) { table_[a * n_ + x] = v; }

  const std::vector<Elem>& table() const noexcept { return table_; }
  std::vector<Elem>& mutable_table() noexcept { return table_; }

  std::string format(Subset a) const { return format_subset(a, names_); }

  friend bool operator==(const ClosureStructure& a, const ClosureStructure& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && (a.q_ == b.q_ || *a.q_ == *b.q_);
  }

 private:
  QuantalePtr q_;
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
};

inline bool same_quantale(const ClosureStructure& a, const ClosureStructure& b) {
  return a.quantale_ptr() == b.quantale_ptr() || a.quantale() == b.quantale();
}

inline void require_same_quantale(const ClosureStructure& a, const ClosureStructure& b) {
  if (!same_quantale(a, b)) throw Error(ErrorKind::QuantaleMismatch, "structures live over different quantales");
}

/// Pointwise c <= d. Witness (A, x) of the first entry where it fails.
inline std::optional<Witness> pointwise_leq(const ClosureStructure& c, const ClosureStructure& d,
                                            const std::string& label = "leq") {
  require_same_quantale(c, d);
  const auto& q = c.quantale();
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < c.points(); ++x)
      if (!q.leq(c(a, x), d(a, x))) return Witness{label, a, 0, x, c(a, x), d(a, x), {}};
  return std::nullopt;
}

inline bool operator<=(const ClosureStructure& c, const ClosureStructure& d) { return !pointwise_leq(c, d); }

/// Pointwise meet.
inline ClosureStructure pointwise_meet(const ClosureStructure& c, const ClosureStructure& d) {
  require_same_quantale(c, d);
  ClosureStructure out = c;
  for (std::size_t i = 0; i < out.table().size(); ++i)
    out.mutable_table()[i] = c.quantale().meet(c.table()[i], d.table()[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

/// (R): k <= (cA)(x) for every x in A.
inline std::optional<Witness> reflexivity_violation(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < c.points(); ++x)
      if (contains(a, x) && !q.leq(q.unit(), c(a, x))) return Witness{"R", a, 0, x, q.unit(), c(a, x), {}};
  return std::nullopt;
}

/// (T): (meet over y in B of (cA)(y)) (x) (cB)(x) <= (cA)(x). lhs is the left side.
inline std::optional<Witness> transitivity_violation(const ClosureStructure& c) {
  const auto& q = c.quantale();
  const std::size_t subsets = c.subsets();
  std::vector<Elem> meets(subsets);
  for (Subset a = 0; a < subsets; ++a) {
    meets[0] = q.top();
    for (Subset b = 1; b < subsets; ++b)
      meets[b] = q.meet(meets[b & (b - 1)], c(a, static_cast<std::size_t>(std::countr_zero(b))));
    for (Subset b = 0; b < subsets; ++b)
      for (std::size_t x = 0; x < c.points(); ++x) {
        Elem lhs = q.tensor(meets[b], c(b, x));
        if (!q.leq(lhs, c(a, x))) return Witness{"T", a, b, x, lhs, c(a, x), {}};
      }
  }
  return std::nullopt;
}

/// (A): (c{})(x) = bottom and c(A u B)(x) = (cA)(x) v (cB)(x).
/// For the first clause the witness has A = B = {}.
inline std::optional<Witness> additivity_violation(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (std::size_t x = 0; x < c.points(); ++x)
    if (c(0, x) != q.bottom()) return Witness{"A", 0, 0, x, c(0, x), q.bottom(), "empty set"};
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = 0; b < c.subsets(); ++b)
      for (std::size_t x = 0; x < c.points(); ++x) {
        Elem joined = q.join(c(a, x), c(b, x));
        if (c(a | b, x) != joined) return Witness{"A", a, b, x, c(a | b, x), joined, {}};
      }
  return std::nullopt;
}

/// B subset of A implies cB <= cA. With `nonempty_only` the premise also
/// requires B nonempty. Witness: a = A, b = B, lhs = (cB)(x), rhs = (cA)(x).
inline std::optional<Witness> monotonicity_violation(const ClosureStructure& c, bool nonempty_only = false) {
  const auto& q = c.quantale();
  const std::string id = nonempty_only ? "monotone_nonempty" : "monotone";
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = a;; b = (b - 1) & a) {
      if (!(nonempty_only && b == 0))
        for (std::size_t x = 0; x < c.points(); ++x)
          if (!q.leq(c(b, x), c(a, x))) return Witness{id, a, b, x, c(b, x), c(a, x), {}};
      if (b == 0) break;
    }
  return std::nullopt;
}

inline bool is_monotone(const ClosureStructure& c) { return !monotonicity_violation(c); }
inline bool satisfies_R(const ClosureStructure& c) { return !reflexivity_violation(c); }
inline bool satisfies_T(const ClosureStructure& c) { return !transitivity_violation(c); }
inline bool satisfies_A(const ClosureStructure& c) { return !additivity_violation(c); }
inline bool is_closure_space(const ClosureStructure& c) { return satisfies_R(c) && satisfies_T(c); }
inline bool is_topological(const ClosureStructure& c) { return is_closure_space(c) && satisfies_A(c); }

/// Items R, T, A, monotone_nonempty, monotone.
inline CheckReport check_axioms(const ClosureStructure& c) {
  CheckReport r{"axioms", {}};
  r.add("R", reflexivity_violation(c));
  r.add("T", transitivity_violation(c));
  r.add("A", additivity_violation(c));
  r.add("monotone_nonempty", monotonicity_violation(c, true));
  r.add("monotone", monotonicity_violation(c, false));
  return r;
}

// ---------------------------------------------------------------------------
// Maps

struct SpaceMap {
  ClosureStructure domain;
  ClosureStructure codomain;
  std::vector<std::size_t> point_map;

  SpaceMap(ClosureStructure dom, ClosureStructure cod, std::vector<std::size_t> f)
      : domain(std::move(dom)), codomain(std::move(cod)), point_map(std::move(f)) {
    require_same_quantale(domain, codomain);
    if (point_map.size() != domain.points())
      throw Error(ErrorKind::OutOfRange, "point map must be total on the domain", {point_map.size()});
    for (std::size_t x = 0; x < point_map.size(); ++x)
      if (point_map[x] >= codomain.points()) throw Error(ErrorKind::OutOfRange, "point map leaves the codomain", {x});
  }
};

/// (C): (cA)(x) <= d(fA)(fx). With `strict` the inequality must be an
/// equality (closure-preserving maps).
inline std::optional<Witness> continuity_violation(const ClosureStructure& c, const ClosureStructure& d,
                                                   const std::vector<std::size_t>& f, bool strict = false) {
  require_same_quantale(c, d);
  const auto& q = c.quantale();
  const std::string id = strict ? "C=" : "C";
  for (Subset a = 0; a < c.subsets(); ++a) {
    const Subset fa = image(a, f);
    for (std::size_t x = 0; x < c.points(); ++x) {
      Elem lhs = c(a, x), rhs = d(fa, f[x]);
      if (strict ? lhs != rhs : !q.leq(lhs, rhs)) return Witness{id, a, 0, x, lhs, rhs, {}};
    }
  }
  return std::nullopt;
}

inline CheckReport check_continuous(const SpaceMap& f, bool strict = false) {
  CheckReport r{"continuity", {}};
  r.add(strict ? "C=" : "C", continuity_violation(f.domain, f.codomain, f.point_map, strict));
  return r;
}

inline bool is_continuous(const ClosureStructure& c, const ClosureStructure& d, const std::vector<std::size_t>& f) {
  return !continuity_violation(c, d, f);
}

// ---------------------------------------------------------------------------
// Standard structures

/// (c A)(x) = k if x in A, bottom otherwise. Already finitely additive.
inline ClosureStructure discrete(const QuantalePtr& q, std::size_t n) {
  ClosureStructure c(q, n);
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < n; ++x) c.set(a, x, contains(a, x) ? q->unit() : q->bottom());
  return c;
}

/// Constant top; with `topological` the empty set goes to constant bottom.
inline ClosureStructure indiscrete(const QuantalePtr& q, std::size_t n, bool topological) {
  ClosureStructure c(q, n);
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < n; ++x) c.set(a, x, (topological && a == 0) ? q->bottom() : q->top());
  return c;
}

// ---------------------------------------------------------------------------
// Level sets and the bar operator

/// c^v A = { z : v <= (cA)(z) }.
inline Subset level_set(const ClosureStructure& c, Elem v, Subset a) {
  Subset out = 0;
  for (std::size_t z = 0; z < c.points(); ++z)
    if (c.quantale().leq(v, c(a, z))) out |= singleton(z);
  return out;
}

/// (bar c A)(x) = join over v of v (x) c(c^v A)(x); with `coprime_only` the
/// join ranges over the coprime elements of the quantale only.
inline ClosureStructure bar(const ClosureStructure& c, bool coprime_only = false) {
  const auto& q = c.quantale();
  const ElemSet values = coprime_only ? coprimes(q.lattice()) : q.lattice().all();
  ClosureStructure out(c.quantale_ptr(), c.points(), c.point_names());
  for (Subset a = 0; a < c.subsets(); ++a)
    for (ElemSet s = values; s != 0; s &= s - 1) {
      auto v = static_cast<Elem>(std::countr_zero(s));
      const Subset level = level_set(c, v, a);
      for (std::size_t x = 0; x < c.points(); ++x) out.set(a, x, q.join(out(a, x), q.tensor(v, c(level, x))));
    }
  return out;
}

/// (T) via the bar operator: for monotone c, c satisfies (T) iff bar(c) <= c.
/// Raises NotMonotone with witness (A, B, x) for non-monotone input.
inline bool check_T_via_bar(const ClosureStructure& c) {
  if (auto w = monotonicity_violation(c))
    throw Error(ErrorKind::NotMonotone, "c" + c.format(w->b) + " is not below c" + c.format(w->a), {w->a, w->b, w->x});
  return bar(c) <= c;
}

}  // namespace vtop
