#pragma once

// Quantale-enriched categories on finite object sets: the quantale itself
// under its residual, powers V^X, the powerset PX with the structure induced
// by the discrete closure, f^! and the Yoneda functor.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vtop/caps.hpp"
#include "vtop/quantale.hpp"
#include "vtop/subset.hpp"

namespace vtop {

class VCategory;
VCategory validate_vcategory(QuantalePtr q, std::size_t n, std::vector<Elem> hom);

/// A V-category with a dense hom table: hom(x, y) at x * n + y.
class VCategory {
 public:
  const Quantale& quantale() const noexcept { return *q_; }
  const QuantalePtr& quantale_ptr() const noexcept { return q_; }
  std::size_t size() const noexcept { return n_; }
  Elem hom(std::size_t x, std::size_t y) const { return hom_[x * n_ + y]; }
  const std::vector<Elem>& table() const noexcept { return hom_; }

 private:
  friend VCategory validate_vcategory(QuantalePtr, std::size_t, std::vector<Elem>);
  friend VCategory make_vcategory_unchecked(QuantalePtr, std::size_t, std::vector<Elem>);
  VCategory(QuantalePtr q, std::size_t n, std::vector<Elem> hom) : q_(std::move(q)), n_(n), hom_(std::move(hom)) {}

  QuantalePtr q_;
  std::size_t n_;
  std::vector<Elem> hom_;
};

using VCategoryPtr = std::shared_ptr<const VCategory>;

/// For constructions whose laws hold by construction; tests validate them.
inline VCategory make_vcategory_unchecked(QuantalePtr q, std::size_t n, std::vector<Elem> hom) {
  return VCategory(std::move(q), n, std::move(hom));
}

/// First violated law: UnitLawFails(x) for k not below a(x, x), or
/// CompositionFails(x, y, z) for a(y, z) (x) a(x, y) not below a(x, z).
inline std::optional<Error> vcategory_violation(const Quantale& q, std::size_t n, const std::vector<Elem>& hom) {
  if (hom.size() != n * n) return Error(ErrorKind::OutOfRange, "hom table must be n x n", {hom.size()});
  for (std::size_t i = 0; i < hom.size(); ++i)
    if (hom[i] >= q.size()) return Error(ErrorKind::OutOfRange, "hom value outside the quantale", {i / n, i % n});
  auto a = [&](std::size_t x, std::size_t y) { return hom[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x)
    if (!q.leq(q.unit(), a(x, x))) return Error(ErrorKind::UnitLawFails, "k is not below hom(x, x)", {x});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!q.leq(q.tensor(a(y, z), a(x, y)), a(x, z)))
          return Error(ErrorKind::CompositionFails, "hom(y,z) (x) hom(x,y) is not below hom(x,z)", {x, y, z});
  return std::nullopt;
}

inline VCategory validate_vcategory(QuantalePtr q, std::size_t n, std::vector<Elem> hom) {
  if (auto err = vcategory_violation(*q, n, hom)) throw *err;
  return VCategory(std::move(q), n, std::move(hom));
}

inline std::optional<Error> vcategory_violation(const VCategory& c) {
  return vcategory_violation(c.quantale(), c.size(), c.table());
}

/// A map of objects with hom(x, y) <= hom(fx, fy); checked on construction.
class VFunctor {
 public:
  VFunctor(VCategoryPtr domain, VCategoryPtr codomain, std::vector<std::size_t> map)
      : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(map)) {
    if (!(dom_->quantale_ptr() == cod_->quantale_ptr() || dom_->quantale() == cod_->quantale()))
      throw Error(ErrorKind::QuantaleMismatch, "V-functor between categories over different quantales");
    if (map_.size() != dom_->size()) throw Error(ErrorKind::OutOfRange, "object map must be total", {map_.size()});
    for (auto y : map_)
      if (y >= cod_->size()) throw Error(ErrorKind::OutOfRange, "object map leaves the codomain", {y});
    const auto& q = dom_->quantale();
    for (std::size_t x = 0; x < dom_->size(); ++x)
      for (std::size_t y = 0; y < dom_->size(); ++y)
        if (!q.leq(dom_->hom(x, y), cod_->hom(map_[x], map_[y])))
          throw Error(ErrorKind::NotAVFunctor, "hom(x,y) is not below hom(fx,fy)", {x, y});
  }

  const VCategory& domain() const noexcept { return *dom_; }
  const VCategory& codomain() const noexcept { return *cod_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

 private:
  VCategoryPtr dom_, cod_;
  std::vector<std::size_t> map_;
};

// ---------------------------------------------------------------------------
// V^X as functions X -> V. An object of the power category is encoded as
// the base-|V| number with digit x equal to sigma(x).

using Valuation = std::vector<Elem>;

inline std::size_t power_count(std::size_t values, std::size_t n, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= values;
    if (count > cap) size_limit("power category objects", count, cap);
  }
  return count;
}

inline Valuation decode_valuation(std::size_t index, std::size_t values, std::size_t n) {
  Valuation s(n);
  for (std::size_t x = 0; x < n; ++x, index /= values) s[x] = static_cast<Elem>(index % values);
  return s;
}

inline std::size_t encode_valuation(const Valuation& s, std::size_t values) {
  std::size_t index = 0;
  for (std::size_t x = s.size(); x-- > 0;) index = index * values + s[x];
  return index;
}

/// [sigma, tau] = meet over x of [sigma x, tau x]; top when X is empty.
inline Elem power_hom(const Quantale& q, const Valuation& sigma, const Valuation& tau) {
  Elem out = q.top();
  for (std::size_t x = 0; x < sigma.size(); ++x) out = q.meet(out, q.residual(sigma[x], tau[x]));
  return out;
}

/// V under its residual: hom(v, w) = [v, w].
inline VCategory self_category(const QuantalePtr& q) {
  const std::size_t n = q->size();
  std::vector<Elem> hom(n * n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) hom[v * n + w] = q->residual(static_cast<Elem>(v), static_cast<Elem>(w));
  return make_vcategory_unchecked(q, n, std::move(hom));
}

inline VCategory power_category(const QuantalePtr& q, std::size_t n, const Caps& caps = {}) {
  const std::size_t count = power_count(q->size(), n, caps.power_objects);
  std::vector<Valuation> objects(count);
  for (std::size_t i = 0; i < count; ++i) objects[i] = decode_valuation(i, q->size(), n);
  std::vector<Elem> hom(count * count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) hom[i * count + j] = power_hom(*q, objects[i], objects[j]);
  return make_vcategory_unchecked(q, count, std::move(hom));
}

/// The discrete closure of A as a valuation: k on A, bottom elsewhere.
inline Valuation discrete_valuation(const Quantale& q, std::size_t n, Subset a) {
  Valuation s(n);
  for (std::size_t x = 0; x < n; ++x) s[x] = contains(a, x) ? q.unit() : q.bottom();
  return s;
}

/// PX with hom(A, B) = [c_disc A, c_disc B]; object index is the subset mask.
inline VCategory pset_category(const QuantalePtr& q, std::size_t n, const Caps& caps = {}) {
  if (n > caps.pset_points) size_limit("base set size for the powerset category", n, caps.pset_points);
  const std::size_t count = std::size_t{1} << n;
  std::vector<Elem> hom(count * count);
  for (Subset a = 0; a < count; ++a)
    for (Subset b = 0; b < count; ++b)
      hom[a * count + b] = power_hom(*q, discrete_valuation(*q, n, a), discrete_valuation(*q, n, b));
  return make_vcategory_unchecked(q, count, std::move(hom));
}

/// f^! : V^Y -> V^X, sigma |-> sigma . f, for f : X -> Y.
inline VFunctor f_shriek(const std::vector<std::size_t>& f, std::size_t codomain_size, const QuantalePtr& q,
                         const Caps& caps = {}) {
  for (auto y : f)
    if (y >= codomain_size) throw Error(ErrorKind::OutOfRange, "map leaves its codomain", {y});
  auto from = std::make_shared<const VCategory>(power_category(q, codomain_size, caps));
  auto to = std::make_shared<const VCategory>(power_category(q, f.size(), caps));
  std::vector<std::size_t> map(from->size());
  for (std::size_t i = 0; i < from->size(); ++i) {
    const Valuation sigma = decode_valuation(i, q->size(), codomain_size);
    Valuation pulled(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) pulled[x] = sigma[f[x]];
    map[i] = encode_valuation(pulled, q->size());
  }
  return VFunctor(std::move(from), std::move(to), std::move(map));
}

/// y(x) = hom(-, x) as a valuation on the objects of C.
inline Valuation yoneda_object(const VCategory& c, std::size_t x) {
  Valuation s(c.size());
  for (std::size_t y = 0; y < c.size(); ++y) s[y] = c.hom(y, x);
  return s;
}

/// Yoneda functor C -> V^{ob C}, x |-> hom(-, x).
inline VFunctor yoneda(const VCategoryPtr& c, const Caps& caps = {}) {
  auto power = std::make_shared<const VCategory>(power_category(c->quantale_ptr(), c->size(), caps));
  std::vector<std::size_t> map(c->size());
  for (std::size_t x = 0; x < c->size(); ++x) map[x] = encode_valuation(yoneda_object(*c, x), c->quantale().size());
  return VFunctor(c, std::move(power), std::move(map));
}

/// hom(x, y) <= [y(x), y(y)] for all objects, evaluated without building V^{ob C}.
/// Returns the first failing pair.
inline std::optional<std::pair<std::size_t, std::size_t>> yoneda_inequality_violation(const VCategory& c) {
  const auto& q = c.quantale();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (!q.leq(c.hom(x, y), power_hom(q, yoneda_object(c, x), yoneda_object(c, y)))) return std::pair{x, y};
  return std::nullopt;
}

}  // namespace vtop
