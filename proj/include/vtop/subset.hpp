#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace vtop {

/// A subset of a finite base set {0, ..., n-1}, bit x set iff x is a member.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxPoints = 16;

constexpr Subset full_set(std::size_t n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr Subset singleton(std::size_t x) { return Subset{1} << x; }
constexpr bool contains(Subset a, std::size_t x) { return (a >> x) & 1u; }
constexpr bool is_subset(Subset b, Subset a) { return (b & ~a) == 0; }
constexpr std::size_t cardinality(Subset a) { return static_cast<std::size_t>(std::popcount(a)); }

/// Brace expression over the given point names, e.g. "{a,b}".
inline std::string format_subset(Subset a, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < names.size(); ++x) {
    if (!contains(a, x)) continue;
    if (!first) out += ",";
    out += names[x];
    first = false;
  }
  return out + "}";
}

/// Image of a subset under a point map.
inline Subset image(Subset a, const std::vector<std::size_t>& f) {
  Subset out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (contains(a, x)) out |= singleton(f[x]);
  return out;
}

/// Preimage of a subset under a point map.
inline Subset preimage(Subset b, const std::vector<std::size_t>& f) {
  Subset out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (contains(b, f[x])) out |= singleton(x);
  return out;
}

}  // namespace vtop
