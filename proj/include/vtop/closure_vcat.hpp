#pragma once

// Equational characterization of closure structures inside V-Cat. A table
// c : PX -> V^X is a closure structure iff [c_disc B, cA] = [cB, cA] for all
// A, B, which is the statement that two composites
//   PX --c--> V^X --y--> V^(V^X) --(c_disc)^!--> V^(PX)
//   PX --c--> V^X --y--> V^(V^X) --c^!-------->  V^(PX)
// agree. The middle object V^(V^X) is never built: a presheaf on V^X is
// represented by the function that evaluates it.

#include <functional>
#include <optional>
#include <string>

#include "vtop/closure.hpp"
#include "vtop/vcat.hpp"

namespace vtop {

struct Prop51Result {
  bool i = false;    // (R) and (T)
  bool ii = false;   // c_disc A <= cA and [c_disc B, cA] <= [cB, cA]
  bool iii = false;  // [c_disc B, cA] = [cB, cA]

  bool coincide() const noexcept { return i == ii && ii == iii; }
};

inline Valuation valuation_of(const ClosureStructure& c, Subset a) {
  Valuation s(c.points());
  for (std::size_t x = 0; x < c.points(); ++x) s[x] = c(a, x);
  return s;
}

inline Prop51Result check_prop51(const ClosureStructure& c) {
  const auto& q = c.quantale();
  const std::size_t n = c.points();
  Prop51Result r;
  r.i = is_closure_space(c);
  bool below = true, hom_leq = true, hom_eq = true;
  std::vector<Valuation> cv(c.subsets()), dv(c.subsets());
  for (Subset a = 0; a < c.subsets(); ++a) {
    cv[a] = valuation_of(c, a);
    dv[a] = discrete_valuation(q, n, a);
    for (std::size_t x = 0; x < n; ++x) below = below && q.leq(dv[a][x], cv[a][x]);
  }
  for (Subset a = 0; a < c.subsets(); ++a)
    for (Subset b = 0; b < c.subsets(); ++b) {
      const Elem lhs = power_hom(q, dv[b], cv[a]), rhs = power_hom(q, cv[b], cv[a]);
      hom_leq = hom_leq && q.leq(lhs, rhs);
      hom_eq = hom_eq && lhs == rhs;
    }
  r.ii = below && hom_leq;
  r.iii = hom_eq;
  return r;
}

/// A presheaf on V^X, represented by its evaluation.
using Presheaf = std::function<Elem(const Valuation&)>;

/// Yoneda embedding of V^X evaluated lazily: tau |-> [-, tau].
inline Presheaf yoneda_power(const QuantalePtr& q, Valuation tau) {
  return [q, tau = std::move(tau)](const Valuation& sigma) { return power_hom(*q, sigma, tau); };
}

/// g^! for g : PX -> V^X, applied to a presheaf: (g^! phi)(B) = phi(g(B)).
inline std::function<Elem(Subset)> restrict_along(Presheaf phi, std::function<Valuation(Subset)> g) {
  return [phi = std::move(phi), g = std::move(g)](Subset b) { return phi(g(b)); };
}

/// Checks, on one table c:
///   composites_agree    the two composites above coincide at every A (fact)
///   composites.iff_closure   composites_agree iff c satisfies (R) and (T)
///   recovery            ({-})^! of the first composite reproduces c exactly
///   closure.vfunctor      when (R) and (T) hold, c : PX -> V^X is a V-functor
inline CheckReport check_cor53_and_recover(const ClosureStructure& c, const Caps& caps = {}) {
  if (c.points() > caps.pset_points) size_limit("base set size", c.points(), caps.pset_points);
  const auto& qp = c.quantale_ptr();
  const auto& q = *qp;
  const std::size_t n = c.points();
  CheckReport r{"closure via V-Cat", {}};

  auto c_map = [&](Subset a) { return valuation_of(c, a); };
  auto disc_map = [&](Subset a) { return discrete_valuation(q, n, a); };
  auto first = [&](Subset a) { return restrict_along(yoneda_power(qp, c_map(a)), disc_map); };
  auto second = [&](Subset a) { return restrict_along(yoneda_power(qp, c_map(a)), c_map); };

  std::optional<Witness> differ;
  for (Subset a = 0; a < c.subsets() && !differ; ++a) {
    auto f = first(a), s = second(a);
    for (Subset b = 0; b < c.subsets(); ++b)
      if (f(b) != s(b)) {
        differ = Witness{"composites_agree", a, b, 0, f(b), s(b), {}};
        break;
      }
  }
  const bool closure = is_closure_space(c);
  r.add("composites_agree", differ);
  r.add_bool("composites.iff_closure", closure == !differ.has_value(),
             Witness{"composites.iff_closure", differ ? differ->a : 0, differ ? differ->b : 0, 0, 0, 0,
                     closure ? "closure structure but composites differ" : "not a closure structure but composites agree"});

  std::optional<Witness> recovery;
  for (Subset a = 0; a < c.subsets() && !recovery; ++a) {
    auto f = first(a);
    for (std::size_t x = 0; x < n; ++x)
      if (f(singleton(x)) != c(a, x)) {
        recovery = Witness{"recovery", a, singleton(x), x, f(singleton(x)), c(a, x), {}};
        break;
      }
  }
  r.add("recovery", recovery);

  std::optional<Witness> vfunctor;
  if (closure) {
    const VCategory pset = pset_category(qp, n, caps);
    for (Subset a = 0; a < c.subsets() && !vfunctor; ++a)
      for (Subset b = 0; b < c.subsets(); ++b) {
        const Elem lhs = pset.hom(a, b), rhs = power_hom(q, c_map(a), c_map(b));
        if (!q.leq(lhs, rhs)) {
          vfunctor = Witness{"closure.vfunctor", a, b, 0, lhs, rhs, {}};
          break;
        }
      }
  }
  r.add("closure.vfunctor", vfunctor, closure ? "" : "vacuous: not a closure structure");
  return r;
}

/// [c_disc {x}, sigma] = sigma(x) for every sigma in V^X and x in X.
inline std::optional<std::pair<std::size_t, std::size_t>> yoneda_identity_violation(const QuantalePtr& q, std::size_t n,
                                                                                      const Caps& caps = {}) {
  const std::size_t count = power_count(q->size(), n, caps.power_objects);
  for (std::size_t i = 0; i < count; ++i) {
    const Valuation sigma = decode_valuation(i, q->size(), n);
    for (std::size_t x = 0; x < n; ++x)
      if (power_hom(*q, discrete_valuation(*q, n, singleton(x)), sigma) != sigma[x]) return std::pair{i, x};
  }
  return std::nullopt;
}

}  // namespace vtop
