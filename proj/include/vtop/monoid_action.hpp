#pragma once

// Closure structures over the free quantale on a monoid M are the same thing
// as lax right actions of M on PX:  x in A.a  iff  a in (cA)(x).

#include <vector>

#include "vtop/closure.hpp"

namespace vtop {

struct LaxAction {
  QuantalePtr quantale;  // must carry a MonoidTag
  std::size_t points = 0;
  std::vector<Subset> table;  // A * |M| + a  ->  A.a

  std::size_t monoid_order() const { return quantale->monoid()->order; }
  Subset operator()(Subset a, std::size_t m) const { return table[a * monoid_order() + m]; }
};

namespace detail {

inline const MonoidTag& require_monoid(const QuantalePtr& q) {
  if (!q || !q->monoid())
    throw Error(ErrorKind::NotFreeMonoidQuantale, "quantale was not built as the powerset of a monoid");
  return *q->monoid();
}

}  // namespace detail

inline LaxAction monoid_action_view(const ClosureStructure& c) {
  const auto& tag = detail::require_monoid(c.quantale_ptr());
  LaxAction act{c.quantale_ptr(), c.points(), std::vector<Subset>(c.subsets() * tag.order, 0)};
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < c.points(); ++x)
      for (std::size_t m = 0; m < tag.order; ++m)
        if ((c(a, x) >> m) & 1u) act.table[a * tag.order + m] |= singleton(x);
  return act;
}

inline ClosureStructure action_to_closure(const LaxAction& act) {
  const auto& tag = detail::require_monoid(act.quantale);
  ClosureStructure c(act.quantale, act.points);
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < act.points; ++x) {
      std::size_t value = 0;
      for (std::size_t m = 0; m < tag.order; ++m)
        if (contains(act(a, m), x)) value |= std::size_t{1} << m;
      c.set(a, x, static_cast<Elem>(value));
    }
  return c;
}

/// Items unit (A subset A.e), composition ((A.a).b subset A.(ab)) and
/// monotone (B subset A => B.b subset A.b). Witness lhs/rhs hold monoid
/// element indices.
inline CheckReport check_lax_action(const LaxAction& act) {
  const auto& tag = detail::require_monoid(act.quantale);
  const std::size_t subsets = std::size_t{1} << act.points;
  CheckReport r{"lax action", {}};

  std::optional<Witness> unit;
  for (Subset a = 0; a < subsets && !unit; ++a)
    if (!is_subset(a, act(a, tag.neutral)))
      unit = Witness{"unit", a, 0, static_cast<std::size_t>(std::countr_zero(a & ~act(a, tag.neutral))),
                     static_cast<Elem>(tag.neutral), 0, {}};
  r.add("unit", unit);

  std::optional<Witness> comp;
  for (Subset a = 0; a < subsets && !comp; ++a)
    for (std::size_t m = 0; m < tag.order && !comp; ++m)
      for (std::size_t k = 0; k < tag.order; ++k) {
        const Subset lost = act(act(a, m), k) & ~act(a, tag.product(m, k));
        if (lost != 0) {
          comp = Witness{"composition", a, 0, static_cast<std::size_t>(std::countr_zero(lost)),
                         static_cast<Elem>(m), static_cast<Elem>(k), {}};
          break;
        }
      }
  r.add("composition", comp);

  std::optional<Witness> mono;
  for (Subset a = 0; a < subsets && !mono; ++a)
    for (Subset b = a;; b = (b - 1) & a) {
      for (std::size_t k = 0; k < tag.order && !mono; ++k) {
        const Subset lost = act(b, k) & ~act(a, k);
        if (lost != 0)
          mono = Witness{"monotone", a, b, static_cast<std::size_t>(std::countr_zero(lost)), static_cast<Elem>(k), 0, {}};
      }
      if (mono || b == 0) break;
    }
  r.add("monotone", mono);
  return r;
}

}  // namespace vtop
