#pragma once

// Standard finite quantales: the trivial one, the two-element chain, chain
// frames, truncated Lawvere and Lukasiewicz chains, free quantales on finite
// monoids, and products. The Lawvere and Lukasiewicz chains are finite
// surrogates only.

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "vtop/lattice_catalog.hpp"
#include "vtop/quantale.hpp"

namespace vtop::quantales {

inline QuantalePtr make(Quantale q) { return std::make_shared<const Quantale>(std::move(q)); }

/// One element, k = bottom = top.
inline QuantalePtr trivial() { return make(validate_quantale(lattices::chain(1, {"*"}), std::vector<Elem>{0}, 0)); }

/// n-element chain with tensor = meet and k = top.
inline QuantalePtr chain_frame(std::size_t n, std::vector<std::string> names = {}) {
  auto L = lattices::chain(n, std::move(names));
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(std::min(a, b));
  return make(validate_quantale(std::move(L), std::move(t), static_cast<Elem>(n - 1)));
}

/// ({bot < top}, meet, top).
inline QuantalePtr two() { return chain_frame(2, {"bot", "top"}); }

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

/// Element index of a value of lawvere_chain(n); values above n are infinity.
inline Elem lawvere_index(std::size_t n, std::size_t value) {
  return value > n ? Elem{0} : static_cast<Elem>(n + 1 - value);
}
inline std::size_t lawvere_value(std::size_t n, Elem index) {
  return index == 0 ? kInfinity : n + 1 - index;
}

/// Carrier {0, ..., n, inf} under the reversed numeric order (bottom = inf,
/// top = 0 = k), tensor = addition truncated to inf above n.
inline QuantalePtr lawvere_chain(std::size_t n) {
  const std::size_t size = n + 2;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back(i == 0 ? "inf" : std::to_string(n + 1 - i));
  auto L = lattices::chain(size, std::move(names));
  std::vector<Elem> t(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      auto va = lawvere_value(n, static_cast<Elem>(a)), vb = lawvere_value(n, static_cast<Elem>(b));
      t[a * size + b] = (va == kInfinity || vb == kInfinity) ? Elem{0} : lawvere_index(n, va + vb);
    }
  return make(validate_quantale(std::move(L), std::move(t), lawvere_index(n, 0)));
}

/// Carrier {0, 1/n, ..., 1}, tensor max(a + b - 1, 0), k = 1.
inline QuantalePtr lukasiewicz_chain(std::size_t n) {
  const std::size_t size = n + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i)
    names.push_back(i == 0 ? "0" : i == n ? "1" : std::to_string(i) + "/" + std::to_string(n));
  auto L = lattices::chain(size, std::move(names));
  std::vector<Elem> t(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) t[a * size + b] = static_cast<Elem>(a + b > n ? a + b - n : 0);
  return make(validate_quantale(std::move(L), std::move(t), static_cast<Elem>(n)));
}

inline constexpr std::size_t kMaxMonoidOrder = 6;

/// Powerset of a finite monoid (row-major multiplication table) ordered by
/// inclusion, with AB = {ab | a in A, b in B} and unit {neutral}. Element
/// index is the bitmask of the subset.
inline QuantalePtr free_on_monoid(std::size_t order, const std::vector<std::size_t>& mult,
                                  std::vector<std::string> names = {}) {
  if (order == 0) throw Error(ErrorKind::InvalidMonoidTable, "monoid must be nonempty");
  if (order > kMaxMonoidOrder) size_limit("monoid order", order, kMaxMonoidOrder);
  if (mult.size() != order * order) throw Error(ErrorKind::InvalidMonoidTable, "table must be order x order");
  for (auto v : mult)
    if (v >= order) throw Error(ErrorKind::InvalidMonoidTable, "table entry outside the monoid", {v});
  if (names.empty())
    for (std::size_t i = 0; i < order; ++i) names.push_back("m" + std::to_string(i));
  if (names.size() != order) throw Error(ErrorKind::InvalidMonoidTable, "names do not match monoid order");
  auto M = [&](std::size_t a, std::size_t b) { return mult[a * order + b]; };
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (M(M(a, b), c) != M(a, M(b, c)))
          throw Error(ErrorKind::InvalidMonoidTable, "not associative", {a, b, c});
  std::optional<std::size_t> neutral;
  for (std::size_t e = 0; e < order && !neutral; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order; ++a) ok = ok && M(e, a) == a && M(a, e) == a;
    if (ok) neutral = e;
  }
  if (!neutral) throw Error(ErrorKind::InvalidMonoidTable, "no neutral element");

  const std::size_t size = std::size_t{1} << order;
  BoolMatrix leq(size, std::vector<bool>(size));
  std::vector<std::string> elem_names;
  for (std::size_t a = 0; a < size; ++a) {
    std::string s = "{";
    for (std::size_t i = 0; i < order; ++i)
      if ((a >> i) & 1u) s += (s.size() > 1 ? "," : "") + names[i];
    elem_names.push_back(s + "}");
    for (std::size_t b = 0; b < size; ++b) leq[a][b] = (a & ~b) == 0;
  }
  std::vector<Elem> t(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      std::size_t prod = 0;
      for (std::size_t i = 0; i < order; ++i)
        if ((a >> i) & 1u)
          for (std::size_t j = 0; j < order; ++j)
            if ((b >> j) & 1u) prod |= std::size_t{1} << M(i, j);
      t[a * size + b] = static_cast<Elem>(prod);
    }
  auto q = validate_quantale(validate_lattice(leq, std::move(elem_names)), std::move(t),
                             static_cast<Elem>(std::size_t{1} << *neutral));
  return make(q.with_monoid(MonoidTag{order, mult, *neutral, std::move(names)}));
}

/// M = {e, a} with a a = a: the free quantale is the four-element Boolean
/// lattice with unit {e} strictly below top, so it is not integral.
inline QuantalePtr free_on_idempotent() { return free_on_monoid(2, {0, 1, 1, 1}, {"e", "a"}); }

/// Componentwise product; index of (a, b) is a * |Q2| + b.
inline QuantalePtr product(const Quantale& q1, const Quantale& q2) {
  auto L = lattices::product(q1.lattice(), q2.lattice());
  const std::size_t n2 = q2.size(), n = q1.size() * n2;
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = q1.tensor(static_cast<Elem>(i / n2), static_cast<Elem>(j / n2));
      auto b = q2.tensor(static_cast<Elem>(i % n2), static_cast<Elem>(j % n2));
      t[i * n + j] = static_cast<Elem>(a * n2 + b);
    }
  return make(validate_quantale(std::move(L), std::move(t), static_cast<Elem>(q1.unit() * n2 + q2.unit())));
}

/// The Boolean frame 2 x 2 with tensor = meet.
inline QuantalePtr boolean_frame2() { return product(*two(), *two()); }

struct NamedQuantale {
  std::string name;
  QuantalePtr quantale;
};

/// The quantales with at most four elements that the theorem suites run on.
inline std::vector<NamedQuantale> small_catalog() {
  return {{"trivial", trivial()},
          {"two", two()},
          {"lawvere2", lawvere_chain(2)},
          {"free_e_a", free_on_idempotent()},
          {"boolean2x2", boolean_frame2()}};
}

/// Broader set used by unit tests: adds three-element chains.
inline std::vector<NamedQuantale> catalog() {
  auto out = small_catalog();
  out.push_back({"chain3", chain_frame(3)});
  out.push_back({"lukasiewicz2", lukasiewicz_chain(2)});
  out.push_back({"lawvere1", lawvere_chain(1)});
  return out;
}

/// Builds a quantale from a kind name and integer parameter, as used in
/// quantale files and on the command line: trivial, two, chain_frame,
/// lawvere_chain, lukasiewicz_chain, free_e_a, boolean2x2.
inline QuantalePtr by_name(const std::string& kind, std::size_t n = 0) {
  if (kind == "trivial") return trivial();
  if (kind == "two") return two();
  if (kind == "chain_frame") return chain_frame(n);
  if (kind == "lawvere_chain") return lawvere_chain(n);
  if (kind == "lukasiewicz_chain") return lukasiewicz_chain(n);
  if (kind == "free_e_a") return free_on_idempotent();
  if (kind == "boolean2x2") return boolean_frame2();
  throw Error(ErrorKind::ValidationError, "unknown quantale kind '" + kind + "'");
}

}  // namespace vtop::quantales
