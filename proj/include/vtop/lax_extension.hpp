#pragma once

#include <vector>

#include "vtop/quantale.hpp"
#include "vtop/subset.hpp"

namespace vtop {

/// A V-valued relation between finite sets, r[x][y] for x in the domain, y in the codomain.
using Relation = std::vector<std::vector<Elem>>;

/// Powerset lax extension: meet over y in B of the join over x in A of r(x, y).
/// The inner join over A = {} is bottom; the outer meet over B = {} is top.
inline Elem powerset_lax_extension(const Quantale& q, const Relation& r, Subset a, Subset b) {
  const std::size_t dom = r.size();
  const std::size_t cod = dom == 0 ? 0 : r.front().size();
  for (const auto& row : r)
    if (row.size() != cod) throw Error(ErrorKind::OutOfRange, "relation rows differ in length");
  if (!is_subset(a, full_set(dom)) || !is_subset(b, full_set(cod)))
    throw Error(ErrorKind::OutOfRange, "subset outside the relation's sets", {a, b});
  Elem out = q.top();
  for (std::size_t y = 0; y < cod; ++y) {
    if (!contains(b, y)) continue;
    Elem inner = q.bottom();
    for (std::size_t x = 0; x < dom; ++x)
      if (contains(a, x)) inner = q.join(inner, r[x][y]);
    out = q.meet(out, inner);
  }
  return out;
}

}  // namespace vtop
