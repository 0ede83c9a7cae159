#pragma once

// The finitely additive core c+ of a closure structure, initial structures
// for families of maps, and limits of topological structures (initial
// structure followed by the core).

#include <span>
#include <string>
#include <vector>

#include "vtop/caps.hpp"
#include "vtop/closure.hpp"

namespace vtop {

/// (c+ A)(x) = meet over finite covers M of A of the join of (cM_i)(x).
///
/// Covers are enumerated as sets of subsets: the join is associative,
/// commutative and idempotent, so ordering and repetition of the parts never
/// change its value. For A nonempty, families with an empty part are skipped;
/// dropping that part leaves a cover whose join is no larger. The only cover
/// of the empty set is the empty family, so (c+{})(x) = bottom.
inline ClosureStructure core(const ClosureStructure& c, const Caps& caps = {}) {
  if (c.points() > caps.core_points) size_limit("base set size for core", c.points(), caps.core_points);
  const auto& q = c.quantale();
  const std::size_t n = c.points();
  ClosureStructure out(c.quantale_ptr(), n, c.point_names());
  for (std::size_t x = 0; x < n; ++x) out.set(0, x, q.bottom());

  std::vector<Subset> parts;
  std::vector<Subset> unions;
  std::vector<Elem> joins;
  for (Subset a = 1; a < c.subsets(); ++a) {
    parts.clear();
    for (Subset s = a; s != 0; s = (s - 1) & a) parts.push_back(s);
    const std::size_t families = std::size_t{1} << parts.size();
    unions.assign(families, 0);
    joins.assign(families * n, q.bottom());
    std::vector<Elem> best(n, q.top());
    for (std::size_t fam = 1; fam < families; ++fam) {
      const std::size_t rest = fam & (fam - 1);
      const auto low = static_cast<std::size_t>(std::countr_zero(fam));
      unions[fam] = unions[rest] | parts[low];
      for (std::size_t x = 0; x < n; ++x) {
        joins[fam * n + x] = q.join(joins[rest * n + x], c(parts[low], x));
        if (unions[fam] == a) best[x] = q.meet(best[x], joins[fam * n + x]);
      }
    }
    for (std::size_t x = 0; x < n; ++x) out.set(a, x, best[x]);
  }
  return out;
}

/// A topological space (Y, d) together with a map g : Y -> X, used to probe
/// the universal property of the core.
struct CoreProbe {
  ClosureStructure domain;
  std::vector<std::size_t> map;
};

/// Checks the core construction on c:
///   hypothesis.RT   c satisfies (R) and (T)
///   core.R/T/A      c+ is a topological structure
///   core.below      c+ <= c
///   counit          identity (X, c+) -> (X, c) is continuous
///   core.monotone   c+ is monotone (no integrality needed)
///   universal       every probe g continuous into (X, c) stays continuous into (X, c+)
/// The report label records whether the quantale is sup-generated by
/// coprimes; without that hypothesis the verdicts are exploratory.
inline CheckReport check_core_theorem(const ClosureStructure& c, std::span<const CoreProbe> probes = {},
                                      const Caps& caps = {}) {
  const bool spatial = is_spatial(c.quantale());
  CheckReport r{spatial ? "core theorem" : "core theorem (hypothesis not met: exploratory)", {}};
  std::optional<Witness> rt = reflexivity_violation(c);
  if (!rt) rt = transitivity_violation(c);
  r.add("hypothesis.RT", rt);

  const ClosureStructure plus = core(c, caps);
  r.add("core.R", reflexivity_violation(plus));
  r.add("core.T", transitivity_violation(plus));
  r.add("core.A", additivity_violation(plus));
  r.add("core.below", pointwise_leq(plus, c, "core.below"));
  std::vector<std::size_t> id(c.points());
  for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
  r.add("counit", continuity_violation(plus, c, id));
  r.add("core.monotone", monotonicity_violation(plus));

  std::optional<Witness> universal;
  std::size_t used = 0, skipped = 0;
  for (std::size_t i = 0; i < probes.size() && !universal; ++i) {
    const auto& p = probes[i];
    require_same_quantale(p.domain, c);
    if (!is_topological(p.domain) || !is_continuous(p.domain, c, p.map)) {
      ++skipped;
      continue;
    }
    ++used;
    if (auto w = continuity_violation(p.domain, plus, p.map)) {
      w->axiom = "universal";
      w->detail = "probe " + std::to_string(i);
      universal = w;
    }
  }
  r.add("universal", universal, std::to_string(used) + " probes used, " + std::to_string(skipped) + " skipped");
  return r;
}

/// One map f : X -> Y into a closure space (Y, d).
struct InitialSource {
  std::vector<std::size_t> map;
  ClosureStructure codomain;
};

/// (cA)(x) = meet over i of d_i(f_i A)(f_i x). The empty family gives the
/// constant-top table (empty meet), which differs from the indiscrete
/// topological structure at A = {}.
inline ClosureStructure initial_structure(const QuantalePtr& q, std::size_t n, std::span<const InitialSource> sources) {
  ClosureStructure c(q, n);
  for (auto& v : c.mutable_table()) v = q->top();
  for (const auto& s : sources) {
    if (!(s.codomain.quantale_ptr() == q || s.codomain.quantale() == *q))
      throw Error(ErrorKind::QuantaleMismatch, "codomain lives over a different quantale");
    if (s.map.size() != n) throw Error(ErrorKind::OutOfRange, "map must be total on the base set", {s.map.size()});
    for (auto y : s.map)
      if (y >= s.codomain.points()) throw Error(ErrorKind::OutOfRange, "map leaves its codomain", {y});
    for (Subset a = 0; a < c.subsets(); ++a) {
      const Subset fa = image(a, s.map);
      for (std::size_t x = 0; x < n; ++x) c.set(a, x, q->meet(c(a, x), s.codomain(fa, s.map[x])));
    }
  }
  return c;
}

/// Limit in the topological spaces: the core of the initial structure.
/// Every codomain must satisfy (R), (T) and (A).
inline ClosureStructure vtop_limit(const QuantalePtr& q, std::size_t n, std::span<const InitialSource> sources,
                                   const Caps& caps = {}) {
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (!is_topological(sources[i].codomain))
      throw Error(ErrorKind::PreconditionFailed, "codomain " + std::to_string(i) + " is not topological", {i});
  return core(initial_structure(q, n, sources), caps);
}

}  // namespace vtop
