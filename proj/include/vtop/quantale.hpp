#pragma once

// Unital quantales on finite lattices: a finite lattice with an associative
// tensor that preserves joins in each variable and has a unit k.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vtop/lattice.hpp"

namespace vtop {

/// Present when a quantale was built as the powerset of a monoid; element
/// indices are then bitmasks over the monoid's elements.
struct MonoidTag {
  std::size_t order = 0;
  std::vector<std::size_t> mult;  // row-major order x order
  std::size_t neutral = 0;
  std::vector<std::string> names;

  std::size_t product(std::size_t a, std::size_t b) const { return mult[a * order + b]; }
};

class Quantale;
Quantale validate_quantale(FiniteLattice lattice, std::vector<Elem> tensor, Elem unit);

class Quantale {
 public:
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem bottom() const noexcept { return lattice_.bottom(); }
  Elem top() const noexcept { return lattice_.top(); }
  Elem unit() const noexcept { return unit_; }
  const std::string& name(Elem a) const { return lattice_.name(a); }

  Elem tensor(Elem a, Elem b) const { return tensor_[a * size() + b]; }

  /// [v, w]: the largest u with u (x) v <= w. Only this residual is provided;
  /// for non-commutative tensors the one with v (x) u <= w differs and is not used.
  Elem residual(Elem v, Elem w) const { return residual_[v * size() + w]; }

  const std::vector<Elem>& tensor_table() const noexcept { return tensor_; }
  const std::optional<MonoidTag>& monoid() const noexcept { return monoid_; }

  Quantale with_monoid(MonoidTag tag) const {
    Quantale q = *this;
    q.monoid_ = std::move(tag);
    return q;
  }

  friend bool operator==(const Quantale& a, const Quantale& b) {
    return a.lattice_ == b.lattice_ && a.tensor_ == b.tensor_ && a.unit_ == b.unit_;
  }

 private:
  friend Quantale validate_quantale(FiniteLattice, std::vector<Elem>, Elem);
  Quantale(FiniteLattice L, std::vector<Elem> t, Elem k) : lattice_(std::move(L)), tensor_(std::move(t)), unit_(k) {}

  FiniteLattice lattice_;
  std::vector<Elem> tensor_;
  std::vector<Elem> residual_;
  Elem unit_;
  std::optional<MonoidTag> monoid_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

namespace detail {

/// First violated quantale law, or nullopt. Checks, in order: table shape and
/// range, unit laws, bottom absorption, join preservation, associativity.
inline std::optional<Error> quantale_violation(const FiniteLattice& L, const std::vector<Elem>& t, Elem k) {
  const std::size_t n = L.size();
  auto T = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  auto nm = [&](std::size_t a) { return L.name(static_cast<Elem>(a)); };
  if (t.size() != n * n) return Error(ErrorKind::OutOfRange, "tensor table must be n x n", {t.size()});
  if (k >= n) return Error(ErrorKind::OutOfRange, "unit outside the carrier", {k});
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n) return Error(ErrorKind::OutOfRange, "tensor entry outside the carrier", {i / n, i % n});

  for (std::size_t v = 0; v < n; ++v)
    if (T(k, v) != v || T(v, k) != v) return Error(ErrorKind::UnitLawFails, "unit law fails at " + nm(v), {v});
  const std::size_t bot = L.bottom();
  for (std::size_t v = 0; v < n; ++v)
    if (T(bot, v) != bot || T(v, bot) != bot)
      return Error(ErrorKind::BottomNotAbsorbing, "bottom does not absorb " + nm(v), {v});
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t u2 = 0; u2 < n; ++u2) {
      const std::size_t j = L.join(static_cast<Elem>(u), static_cast<Elem>(u2));
      for (std::size_t v = 0; v < n; ++v) {
        if (T(j, v) != L.join(T(u, v), T(u2, v)))
          return Error(ErrorKind::JoinNotPreserved,
                       "left variable: (" + nm(u) + " v " + nm(u2) + ") (x) " + nm(v), {0, u, u2, v});
        if (T(v, j) != L.join(T(v, u), T(v, u2)))
          return Error(ErrorKind::JoinNotPreserved,
                       "right variable: " + nm(v) + " (x) (" + nm(u) + " v " + nm(u2) + ")", {1, u, u2, v});
      }
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (T(T(u, v), w) != T(u, T(v, w)))
          return Error(ErrorKind::NotAssociative, "(" + nm(u) + "," + nm(v) + "," + nm(w) + ")", {u, v, w});
  return std::nullopt;
}

}  // namespace detail

/// Validates the tensor (row-major, entry a * n + b is a (x) b) and unit.
/// In a finite lattice, preserving binary joins and bottom in each variable
/// is preserving all joins.
inline Quantale validate_quantale(FiniteLattice lattice, std::vector<Elem> tensor, Elem unit) {
  if (auto err = detail::quantale_violation(lattice, tensor, unit)) throw *err;
  Quantale q(std::move(lattice), std::move(tensor), unit);
  const std::size_t n = q.size();
  q.residual_.assign(n * n, q.bottom());
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      ElemSet below = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (q.leq(q.tensor(static_cast<Elem>(u), static_cast<Elem>(v)), static_cast<Elem>(w))) below |= elem_bit(u);
      q.residual_[v * n + w] = q.lattice().join_of(below);
    }
  return q;
}

inline Quantale validate_quantale(FiniteLattice lattice, const std::vector<std::vector<Elem>>& rows, Elem unit) {
  std::vector<Elem> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorKind::OutOfRange, "tensor table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_quantale(std::move(lattice), std::move(flat), unit);
}

inline Elem residual(const Quantale& q, Elem v, Elem w) { return q.residual(v, w); }

struct Classification {
  bool integral = false;
  bool commutative = false;
  bool lattice_spatial = false;
};

inline Classification classify(const Quantale& q) {
  Classification c;
  c.integral = q.unit() == q.top();
  c.commutative = true;
  for (std::size_t a = 0; a < q.size() && c.commutative; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (q.tensor(static_cast<Elem>(a), static_cast<Elem>(b)) != q.tensor(static_cast<Elem>(b), static_cast<Elem>(a))) {
        c.commutative = false;
        break;
      }
  c.lattice_spatial = is_sup_generated_by_coprimes(q.lattice()).holds();
  return c;
}

inline bool is_spatial(const Quantale& q) { return is_sup_generated_by_coprimes(q.lattice()).holds(); }

}  // namespace vtop
