#pragma once

// Structure generators for the theorem suites: exhaustive enumeration of all
// tables PX -> V^X, and seeded random tables, monotone tables, closure
// spaces and topological spaces.
//
// Random scheme: std::mt19937_64 seeded with the run seed; a draw below n is
// `engine() % n`. Both are fixed by the standard, so witnesses reproduce
// across platforms from the seed alone.

#include <cstdint>
#include <random>
#include <vector>

#include "vtop/caps.hpp"
#include "vtop/closure.hpp"
#include "vtop/core.hpp"

namespace vtop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Number of tables PX -> V^X, or 0 if it exceeds 2^63.
inline std::uint64_t table_count(std::size_t values, std::size_t n) {
  const std::size_t cells = (std::size_t{1} << n) * n;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (count > (std::uint64_t{1} << 63) / values) return 0;
    count *= values;
  }
  return count;
}

/// Visits every table PX -> V^X, with no axiom filter. The callback
/// receives a structure that is reused between calls.
template <class Fn>
void for_each_table(const QuantalePtr& q, std::size_t n, Fn&& fn, const Caps& caps = {}) {
  if (n > caps.oracle_points) size_limit("base set size for exhaustive structures", n, caps.oracle_points);
  if (q->size() > caps.exhaustive_values) size_limit("quantale size for exhaustive structures", q->size(), caps.exhaustive_values);
  ClosureStructure c(q, n);
  auto& t = c.mutable_table();
  const auto values = static_cast<Elem>(q->size());
  for (auto& v : t) v = 0;
  while (true) {
    fn(static_cast<const ClosureStructure&>(c));
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == values) t[i++] = 0;
    if (i == t.size()) break;
  }
}

inline ClosureStructure random_table(const QuantalePtr& q, std::size_t n, Rng& rng) {
  ClosureStructure c(q, n);
  for (auto& v : c.mutable_table()) v = static_cast<Elem>(rng.below(q->size()));
  return c;
}

/// (cA)(x) = join over B subset A of t(B)(x): the least monotone table above t.
inline ClosureStructure monotone_hull(const ClosureStructure& t) {
  const auto& q = t.quantale();
  ClosureStructure c = t;
  for (Subset a = 0; a < t.subsets(); ++a)
    for (Subset b = a;; b = (b - 1) & a) {
      for (std::size_t x = 0; x < t.points(); ++x) c.set(a, x, q.join(c(a, x), t(b, x)));
      if (b == 0) break;
    }
  return c;
}

/// The least structure above t satisfying (R) and (T): raise every entry to
/// k on A, then join in the left side of (T) until nothing changes.
inline ClosureStructure rt_closure(const ClosureStructure& t) {
  const auto& q = t.quantale();
  ClosureStructure c = t;
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < c.points(); ++x)
      if (contains(a, x)) c.set(a, x, q.join(c(a, x), q.unit()));
  std::vector<Elem> meets(c.subsets());
  for (bool changed = true; changed;) {
    changed = false;
    for (Subset a = 0; a < c.subsets(); ++a) {
      meets[0] = q.top();
      for (Subset b = 1; b < c.subsets(); ++b)
        meets[b] = q.meet(meets[b & (b - 1)], c(a, static_cast<std::size_t>(std::countr_zero(b))));
      for (Subset b = 0; b < c.subsets(); ++b)
        for (std::size_t x = 0; x < c.points(); ++x) {
          const Elem raised = q.join(c(a, x), q.tensor(meets[b], c(b, x)));
          if (raised != c(a, x)) {
            c.set(a, x, raised);
            changed = true;
          }
        }
    }
  }
  return c;
}

/// A table whose entries are bottom with probability 3/4, otherwise uniform.
inline ClosureStructure sparse_table(const QuantalePtr& q, std::size_t n, Rng& rng) {
  ClosureStructure c(q, n);
  for (auto& v : c.mutable_table()) v = rng.chance(1, 4) ? static_cast<Elem>(rng.below(q->size())) : q->bottom();
  return c;
}

/// Random closure space: the meet of one to three rt_closures of sparse tables.
inline ClosureStructure random_closure_space(const QuantalePtr& q, std::size_t n, Rng& rng) {
  ClosureStructure c = rt_closure(sparse_table(q, n, rng));
  const std::size_t extra = rng.below(3);
  for (std::size_t i = 0; i < extra; ++i) c = pointwise_meet(c, rt_closure(sparse_table(q, n, rng)));
  return c;
}

/// Random topological space; needs a quantale sup-generated by coprimes.
inline ClosureStructure random_topological_space(const QuantalePtr& q, std::size_t n, Rng& rng,
                                                 const Caps& caps = {}) {
  return core(random_closure_space(q, n, rng), caps);
}

}  // namespace vtop
