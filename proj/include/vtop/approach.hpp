#pragma once

#include <string>
#include <vector>

#include "vtop/closure.hpp"
#include "vtop/quantale_builders.hpp"

namespace vtop {

/// Distances between points; quantales::kInfinity marks an infinite distance.
using DistanceMatrix = std::vector<std::vector<std::size_t>>;

namespace detail {

inline std::size_t add_distances(std::size_t a, std::size_t b) {
  return (a == quantales::kInfinity || b == quantales::kInfinity) ? quantales::kInfinity : a + b;
}

}  // namespace detail

/// Raises NotAMetric with witness (x, y) or (x, y, z) for the first failing
/// law: zero diagonal, symmetry, triangle inequality. Distinct points may be
/// at distance 0.
inline void validate_metric(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (const auto& row : d)
    if (row.size() != n) throw Error(ErrorKind::NotAMetric, "distance matrix is not square");
  for (std::size_t x = 0; x < n; ++x)
    if (d[x][x] != 0) throw Error(ErrorKind::NotAMetric, "nonzero self-distance", {x, x});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d[x][y] != d[y][x]) throw Error(ErrorKind::NotAMetric, "not symmetric", {x, y});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (d[x][z] != quantales::kInfinity && d[x][z] > detail::add_distances(d[x][y], d[y][z]))
          throw Error(ErrorKind::NotAMetric, "triangle inequality fails", {x, y, z});
}

/// Point-set distance delta(x, A) = min over a in A of d(x, a), delta(x, {}) = inf,
/// as a structure over lawvere_chain(n) (distances above n become inf).
inline ClosureStructure approach_from_metric(const DistanceMatrix& d, std::size_t truncation,
                                             QuantalePtr q = nullptr) {
  validate_metric(d);
  if (!q) q = quantales::lawvere_chain(truncation);
  if (q->size() != truncation + 2) throw Error(ErrorKind::QuantaleMismatch, "quantale is not lawvere_chain(n)");
  const std::size_t n = d.size();
  ClosureStructure c(q, n);
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t best = quantales::kInfinity;
      for (std::size_t y = 0; y < n; ++y)
        if (contains(a, y)) best = std::min(best, d[x][y]);
      c.set(a, x, quantales::lawvere_index(truncation, best));
    }
  return c;
}

}  // namespace vtop
