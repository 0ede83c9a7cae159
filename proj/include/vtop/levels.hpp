#pragma once

// Level-family presentation of closure structures: c corresponds to the
// family of maps c^v : PX -> PX, c^v A = { z : v <= (cA)(z) }, subject to
//   C0  B subset A  =>  c^v B subset c^v A
//   C1  v <= join(u_i)  =>  intersection of c^{u_i} A subset c^v A
//   C2  A subset c^k A
//   C3  c^u c^v A subset c^{v (x) u} A
// and conversely (cA)(x) = join { v : x in c^v A }.

#include <string>
#include <vector>

#include "vtop/caps.hpp"
#include "vtop/closure.hpp"

namespace vtop {

class LevelFamily {
 public:
  /// Every level map sends every subset to the empty set.
  LevelFamily(QuantalePtr q, std::size_t n) : q_(std::move(q)), n_(n) {
    if (n_ > kMaxStructurePoints) size_limit("base set size", n_, kMaxStructurePoints);
    levels_.assign(q_->size() << n_, 0);
  }

  const Quantale& quantale() const noexcept { return *q_; }
  const QuantalePtr& quantale_ptr() const noexcept { return q_; }
  std::size_t points() const noexcept { return n_; }
  std::size_t subsets() const noexcept { return std::size_t{1} << n_; }

  Subset operator()(Elem v, Subset a) const { return levels_[(std::size_t{v} << n_) + a]; }
  void set(Elem v, Subset a, Subset value) { levels_[(std::size_t{v} << n_) + a] = value & full_set(n_); }

  friend bool operator==(const LevelFamily& a, const LevelFamily& b) {
    return a.n_ == b.n_ && a.levels_ == b.levels_ && (a.q_ == b.q_ || *a.q_ == *b.q_);
  }

 private:
  QuantalePtr q_;
  std::size_t n_;
  std::vector<Subset> levels_;
};

/// The level family of a closure space. Raises PreconditionFailed unless c
/// satisfies (R) and (T).
inline LevelFamily to_levels(const ClosureStructure& c) {
  if (!is_closure_space(c)) throw Error(ErrorKind::PreconditionFailed, "to_levels needs a structure satisfying (R) and (T)");
  LevelFamily f(c.quantale_ptr(), c.points());
  for (std::size_t v = 0; v < c.quantale().size(); ++v)
    for (Subset a = 0; a < c.subsets(); ++a) f.set(static_cast<Elem>(v), a, level_set(c, static_cast<Elem>(v), a));
  return f;
}

/// (cA)(x) = join { v : x in c^v A }, with no validity check.
inline ClosureStructure from_levels_unchecked(const LevelFamily& f) {
  const auto& q = f.quantale();
  ClosureStructure c(f.quantale_ptr(), f.points());
  for (Subset a = 0; a < f.subsets(); ++a)
    for (std::size_t x = 0; x < f.points(); ++x) {
      ElemSet vs = 0;
      for (std::size_t v = 0; v < q.size(); ++v)
        if (contains(f(static_cast<Elem>(v), a), x)) vs |= elem_bit(v);
      c.set(a, x, q.lattice().join_of(vs));
    }
  return c;
}

/// Items C0, C1, C2, C3. C1 enumerates all subsets {u_i} of the quantale.
/// Witness fields: C0 (a = A, b = B, x, lhs = v); C1 (a = A, x, lhs = v,
/// detail = the u_i); C2 (a = A, x, lhs = k); C3 (a = A, x, lhs = u, rhs = v).
inline CheckReport check_levels(const LevelFamily& f, const Caps& caps = {}) {
  const auto& q = f.quantale();
  const auto& L = q.lattice();
  const std::size_t nv = q.size();
  CheckReport r{"levels", {}};

  std::optional<Witness> c0;
  for (std::size_t v = 0; v < nv && !c0; ++v)
    for (Subset a = 0; a < f.subsets() && !c0; ++a)
      for (Subset b = a;; b = (b - 1) & a) {
        const Subset lost = f(static_cast<Elem>(v), b) & ~f(static_cast<Elem>(v), a);
        if (lost != 0) {
          c0 = Witness{"C0", a, b, static_cast<std::size_t>(std::countr_zero(lost)), static_cast<Elem>(v), 0, {}};
          break;
        }
        if (b == 0) break;
      }
  r.add("C0", c0);

  if (nv > caps.totally_below_elements) size_limit("quantale size for C1", nv, caps.totally_below_elements);
  std::optional<Witness> c1;
  const ElemSet limit = L.all();
  for (Subset a = 0; a < f.subsets() && !c1; ++a)
    for (ElemSet us = 0;; ++us) {
      const Elem j = L.join_of(us);
      Subset inter = full_set(f.points());
      for (ElemSet s = us; s != 0; s &= s - 1) inter &= f(static_cast<Elem>(std::countr_zero(s)), a);
      for (std::size_t v = 0; v < nv && !c1; ++v) {
        if (!L.leq(static_cast<Elem>(v), j)) continue;
        const Subset lost = inter & ~f(static_cast<Elem>(v), a);
        if (lost != 0) {
          std::string us_names = "{";
          for (ElemSet s = us; s != 0; s &= s - 1)
            us_names += (us_names.size() > 1 ? "," : "") + q.name(static_cast<Elem>(std::countr_zero(s)));
          c1 = Witness{"C1", a, 0, static_cast<std::size_t>(std::countr_zero(lost)), static_cast<Elem>(v), j,
                       "u_i = " + us_names + "}"};
        }
      }
      if (c1 || us == limit) break;
    }
  r.add("C1", c1);

  std::optional<Witness> c2;
  for (Subset a = 0; a < f.subsets() && !c2; ++a) {
    const Subset lost = a & ~f(q.unit(), a);
    if (lost != 0) c2 = Witness{"C2", a, 0, static_cast<std::size_t>(std::countr_zero(lost)), q.unit(), 0, {}};
  }
  r.add("C2", c2);

  std::optional<Witness> c3;
  for (std::size_t u = 0; u < nv && !c3; ++u)
    for (std::size_t v = 0; v < nv && !c3; ++v)
      for (Subset a = 0; a < f.subsets(); ++a) {
        auto eu = static_cast<Elem>(u), ev = static_cast<Elem>(v);
        const Subset lost = f(eu, f(ev, a)) & ~f(q.tensor(ev, eu), a);
        if (lost != 0) {
          c3 = Witness{"C3", a, 0, static_cast<std::size_t>(std::countr_zero(lost)), eu, ev, {}};
          break;
        }
      }
  r.add("C3", c3);
  return r;
}

/// Closure structure of a family satisfying C0-C3; otherwise raises
/// LevelsInvalid with witness (condition index, A, B, x).
inline ClosureStructure from_levels(const LevelFamily& f, const Caps& caps = {}) {
  const auto report = check_levels(f, caps);
  for (std::size_t i = 0; i < report.items.size(); ++i)
    if (!report.items[i].pass) {
      const auto& w = *report.items[i].witness;
      throw Error(ErrorKind::LevelsInvalid,
                  report.items[i].id + " fails at subset mask " + std::to_string(w.a) + ", point " + std::to_string(w.x),
                  {i, w.a, w.b, w.x});
    }
  return from_levels_unchecked(f);
}

/// Level-wise additivity at the coprime elements:
/// c^p {} = {} and c^p(A u B) = c^p A u c^p B for every coprime p.
inline std::optional<Witness> coprime_level_additivity_violation(const ClosureStructure& c) {
  const auto& q = c.quantale();
  for (ElemSet s = coprimes(q.lattice()); s != 0; s &= s - 1) {
    const auto p = static_cast<Elem>(std::countr_zero(s));
    if (level_set(c, p, 0) != 0) return Witness{"coprime_levels", 0, 0, 0, p, 0, "empty set"};
    for (Subset a = 0; a < c.subsets(); ++a)
      for (Subset b = 0; b < c.subsets(); ++b)
        if (level_set(c, p, a | b) != (level_set(c, p, a) | level_set(c, p, b)))
          return Witness{"coprime_levels", a, b, 0, p, 0, {}};
  }
  return std::nullopt;
}

}  // namespace vtop
