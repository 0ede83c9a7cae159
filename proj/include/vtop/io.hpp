#pragma once

// JSON file formats for lattices, quantales, spaces and maps.
//
//   lattice  {"size": 3, "names": ["0","a","1"], "leq": [["0","a"], ["a","1"]]}
//            `leq` is a list of pairs generating the order (reflexive and
//            transitive closure is taken), or a size x size matrix of
//            booleans. Pair entries are names or indices.
//   quantale {"lattice": <lattice or path>, "tensor": [[names]], "unit": name}
//            or {"builtin": "lawvere_chain", "n": 2}. A free quantale also
//            carries {"monoid": {"elements": [...], "mult": [[names]]}}.
//   space    {"quantale": <quantale or path>, "points": ["s","t"],
//            "closure": {"{}": [v_s, v_t], "{s}": [...], ...}}
//            Every subset must appear exactly once.
//   map      {"from": <space or path>, "to": <space or path>,
//            "assignment": {"x": "y", ...}}
//   maps     {"quantale": ..., "points": [...],
//            "maps": [{"to": <space or path>, "assignment": {...}}, ...]}
//
// Relative paths resolve against the directory of the file that names them.
// Malformed input raises ParseError with a line/column or field location;
// well-formed input that breaks a law raises ValidationError carrying the
// witness of the underlying check.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vtop/closure.hpp"
#include "vtop/core.hpp"
#include "vtop/lattice.hpp"
#include "vtop/quantale.hpp"
#include "vtop/quantale_builders.hpp"

namespace vtop::io {

using Json = nlohmann::ordered_json;

/// Where a document came from, for error locations and relative paths.
struct Origin {
  std::string source = "<input>";
  std::filesystem::path base_dir = ".";
};

namespace detail {

[[noreturn]] inline void fail(const Origin& o, const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::ParseError, o.source + ": field '" + field + "': " + msg);
}

/// Re-raises a law violation from a constructor as ValidationError with the
/// field location prepended and the witness kept.
template <class Fn>
auto delegate(const Origin& o, const std::string& field, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    throw Error(ErrorKind::ValidationError, o.source + ": field '" + field + "': " + e.what(), e.witness());
  }
}

inline const Json& require(const Origin& o, const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(o, path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(o, path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline std::vector<std::string> name_list(const Origin& o, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(o, path, "expected a list of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(o, path + "[" + std::to_string(i) + "]", "expected a string");
    const std::string s = j[i].get<std::string>();
    for (const auto& prev : out)
      if (prev == s) fail(o, path + "[" + std::to_string(i) + "]", "duplicate name '" + s + "'");
    out.push_back(s);
  }
  return out;
}

/// A reference to one of `names`, by name or by index.
inline std::size_t index_of(const Origin& o, const Json& j, const std::vector<std::string>& names,
                            const std::string& path) {
  if (j.is_number_unsigned()) {
    const auto i = j.get<std::size_t>();
    if (i >= names.size()) fail(o, path, "index " + std::to_string(i) + " out of range");
    return i;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return i;
    fail(o, path, "unknown name '" + s + "'");
  }
  fail(o, path, "expected a name or an index");
}

inline Json json_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorKind::ParseError, path.string() + ": " + msg);
  }
}

/// An inline object, or a string path to a file holding one.
inline std::pair<Json, Origin> resolve(const Origin& o, const Json& j, const std::string& path) {
  if (j.is_object()) return {j, o};
  if (!j.is_string()) fail(o, path, "expected an object or a file path");
  std::filesystem::path p = j.get<std::string>();
  if (p.is_relative()) p = o.base_dir / p;
  return {json_from_file(p), Origin{p.string(), p.parent_path()}};
}

}  // namespace detail

inline Json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorKind::ParseError, source + ": " + msg);
  }
}

// ---------------------------------------------------------------------------
// Subsets

/// Parses "{a, b}" over the given point names.
inline Subset parse_subset(const std::string& text, const std::vector<std::string>& names,
                           const Origin& o = {}, const std::string& path = "subset") {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '{') detail::fail(o, path, "subset must start with '{': " + text);
  ++i;
  Subset out = 0;
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != '}') ++i;
      if (i >= text.size()) detail::fail(o, path, "unterminated subset: " + text);
      std::string name = text.substr(start, i - start);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      std::size_t x = names.size();
      for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) x = k;
      if (x == names.size()) detail::fail(o, path, "unknown point '" + name + "' in " + text);
      if (contains(out, x)) detail::fail(o, path, "point '" + name + "' repeated in " + text);
      out |= singleton(x);
      if (text[i++] == '}') break;
    }
  }
  skip();
  if (i != text.size()) detail::fail(o, path, "trailing text after subset: " + text);
  return out;
}

// ---------------------------------------------------------------------------
// Lattices

inline FiniteLattice lattice_from_json(const Json& j, const Origin& o = {}, const std::string& path = "") {
  const Json& size_j = detail::require(o, j, "size", path);
  if (!size_j.is_number_unsigned() || size_j.get<std::size_t>() == 0)
    detail::fail(o, detail::join_path(path, "size"), "expected a positive integer");
  const auto n = size_j.get<std::size_t>();
  if (n > kMaxLatticeSize) size_limit("lattice size", n, kMaxLatticeSize);
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = detail::name_list(o, j["names"], detail::join_path(path, "names"));
    if (names.size() != n) detail::fail(o, detail::join_path(path, "names"), "expected " + std::to_string(n) + " names");
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  const std::string leq_path = detail::join_path(path, "leq");
  const Json& leq = detail::require(o, j, "leq", path);
  if (!leq.is_array()) detail::fail(o, leq_path, "expected a list");
  const bool matrix = !leq.empty() && leq[0].is_array() && !leq[0].empty() && leq[0][0].is_boolean();
  if (matrix) {
    if (leq.size() != n) detail::fail(o, leq_path, "matrix must have one row per element");
    BoolMatrix m(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      const std::string row_path = leq_path + "[" + std::to_string(a) + "]";
      if (!leq[a].is_array() || leq[a].size() != n) detail::fail(o, row_path, "expected " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq[a][b].is_boolean()) detail::fail(o, row_path + "[" + std::to_string(b) + "]", "expected a boolean");
        m[a][b] = leq[a][b].get<bool>();
      }
    }
    return detail::delegate(o, leq_path, [&] { return validate_lattice(m, names); });
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string pair_path = leq_path + "[" + std::to_string(i) + "]";
    if (!leq[i].is_array() || leq[i].size() != 2) detail::fail(o, pair_path, "expected a pair");
    pairs.emplace_back(detail::index_of(o, leq[i][0], names, pair_path + "[0]"),
                       detail::index_of(o, leq[i][1], names, pair_path + "[1]"));
  }
  return detail::delegate(o, leq_path, [&] { return lattice_from_pairs(n, pairs, names); });
}

/// Serializes with the covering pairs of the order.
inline Json lattice_to_json(const FiniteLattice& L) {
  Json j;
  j["size"] = L.size();
  j["names"] = L.names();
  Json leq = Json::array();
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b) {
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (!L.lt(ea, eb)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < L.size() && cover; ++c)
        cover = !(L.lt(ea, static_cast<Elem>(c)) && L.lt(static_cast<Elem>(c), eb));
      if (cover) leq.push_back(Json::array({L.name(ea), L.name(eb)}));
    }
  j["leq"] = std::move(leq);
  return j;
}

// ---------------------------------------------------------------------------
// Quantales

inline QuantalePtr quantale_from_json(const Json& input, const Origin& origin = {}, const std::string& path = "") {
  const auto& j = input;
  const auto& o = origin;
  if (!j.is_object()) detail::fail(o, path, "expected an object");
  if (j.contains("builtin")) {
    const Json& kind = j["builtin"];
    if (!kind.is_string()) detail::fail(o, detail::join_path(path, "builtin"), "expected a string");
    std::size_t n = 0;
    if (j.contains("n")) {
      if (!j["n"].is_number_unsigned()) detail::fail(o, detail::join_path(path, "n"), "expected an integer");
      n = j["n"].get<std::size_t>();
    }
    return detail::delegate(o, detail::join_path(path, "builtin"),
                            [&] { return quantales::by_name(kind.get<std::string>(), n); });
  }
  if (j.contains("monoid")) {
    const std::string mpath = detail::join_path(path, "monoid");
    const Json& m = j["monoid"];
    const auto elems = detail::name_list(o, detail::require(o, m, "elements", mpath), mpath + ".elements");
    const Json& rows = detail::require(o, m, "mult", mpath);
    if (!rows.is_array() || rows.size() != elems.size()) detail::fail(o, mpath + ".mult", "expected one row per element");
    std::vector<std::size_t> mult;
    for (std::size_t a = 0; a < elems.size(); ++a) {
      const std::string rp = mpath + ".mult[" + std::to_string(a) + "]";
      if (!rows[a].is_array() || rows[a].size() != elems.size()) detail::fail(o, rp, "expected one entry per element");
      for (std::size_t b = 0; b < elems.size(); ++b)
        mult.push_back(detail::index_of(o, rows[a][b], elems, rp + "[" + std::to_string(b) + "]"));
    }
    auto q = detail::delegate(o, mpath, [&] { return quantales::free_on_monoid(elems.size(), mult, elems); });
    if (j.contains("tensor") || j.contains("lattice")) {
      auto stripped = j;
      stripped.erase("monoid");
      auto explicit_q = quantale_from_json(stripped, o, path);
      if (!(*explicit_q == *q))
        throw Error(ErrorKind::ValidationError,
                    o.source + ": field '" + mpath + "': monoid does not generate the given lattice and tensor");
    }
    return q;
  }
  const std::string lpath = detail::join_path(path, "lattice");
  auto [lj, lo] = detail::resolve(o, detail::require(o, j, "lattice", path), lpath);
  FiniteLattice L = lattice_from_json(lj, lo, lo.source == o.source ? lpath : "");
  const std::size_t n = L.size();
  const std::string tpath = detail::join_path(path, "tensor");
  const Json& rows = detail::require(o, j, "tensor", path);
  if (!rows.is_array() || rows.size() != n) detail::fail(o, tpath, "expected one row per element");
  std::vector<Elem> t;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = tpath + "[" + std::to_string(a) + "]";
    if (!rows[a].is_array() || rows[a].size() != n) detail::fail(o, rp, "expected one entry per element");
    for (std::size_t b = 0; b < n; ++b)
      t.push_back(static_cast<Elem>(detail::index_of(o, rows[a][b], L.names(), rp + "[" + std::to_string(b) + "]")));
  }
  const auto unit = static_cast<Elem>(detail::index_of(o, detail::require(o, j, "unit", path), L.names(),
                                                       detail::join_path(path, "unit")));
  return quantales::make(detail::delegate(o, tpath, [&] { return validate_quantale(std::move(L), t, unit); }));
}

inline Json quantale_to_json(const Quantale& q) {
  Json j;
  j["lattice"] = lattice_to_json(q.lattice());
  Json rows = Json::array();
  for (std::size_t a = 0; a < q.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < q.size(); ++b) row.push_back(q.name(q.tensor(static_cast<Elem>(a), static_cast<Elem>(b))));
    rows.push_back(std::move(row));
  }
  j["tensor"] = std::move(rows);
  j["unit"] = q.name(q.unit());
  if (const auto& m = q.monoid()) {
    Json mult = Json::array();
    for (std::size_t a = 0; a < m->order; ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < m->order; ++b) row.push_back(m->names[m->product(a, b)]);
      mult.push_back(std::move(row));
    }
    j["monoid"] = Json{{"elements", m->names}, {"mult", std::move(mult)}};
  }
  return j;
}

// ---------------------------------------------------------------------------
// Spaces

inline ClosureStructure space_from_json(const Json& j, const Origin& o = {}, const std::string& path = "",
                                        const QuantalePtr& expected = nullptr) {
  const std::string qpath = detail::join_path(path, "quantale");
  QuantalePtr q;
  if (j.is_object() && !j.contains("quantale") && expected) {
    q = expected;
  } else {
    auto [qj, qo] = detail::resolve(o, detail::require(o, j, "quantale", path), qpath);
    q = quantale_from_json(qj, qo, qo.source == o.source ? qpath : "");
  }
  if (expected && !(*q == *expected))
    throw Error(ErrorKind::ValidationError, o.source + ": field '" + qpath + "': space lives over a different quantale");
  if (expected) q = expected;
  const std::string ppath = detail::join_path(path, "points");
  const auto points = detail::name_list(o, detail::require(o, j, "points", path), ppath);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].empty() || points[i].find_first_of("{},") != std::string::npos)
      detail::fail(o, ppath + "[" + std::to_string(i) + "]", "point names must be nonempty and avoid '{', '}' and ','");
  if (points.size() > kMaxStructurePoints) size_limit("base set size", points.size(), kMaxStructurePoints);
  const std::size_t n = points.size();
  const std::string cpath = detail::join_path(path, "closure");
  const Json& closure = detail::require(o, j, "closure", path);
  if (!closure.is_object()) detail::fail(o, cpath, "expected a map from subsets to value lists");
  std::vector<Elem> table(n << n);
  std::vector<bool> seen(std::size_t{1} << n);
  for (const auto& [key, values] : closure.items()) {
    const std::string kp = cpath + "." + key;
    const Subset a = parse_subset(key, points, o, kp);
    if (seen[a]) detail::fail(o, kp, "subset listed twice");
    seen[a] = true;
    if (!values.is_array() || values.size() != n) detail::fail(o, kp, "expected one value per point");
    for (std::size_t x = 0; x < n; ++x) {
      const Json& v = values[x];
      const std::string vp = kp + "[" + std::to_string(x) + "]";
      if (v.is_string() && !q->lattice().find(v.get<std::string>()))
        throw Error(ErrorKind::ValidationError,
                    o.source + ": field '" + vp + "': value '" + v.get<std::string>() + "' is not in the quantale", {a, x});
      table[a * n + x] = static_cast<Elem>(detail::index_of(o, v, q->lattice().names(), vp));
    }
  }
  for (Subset a = 0; a < seen.size(); ++a)
    if (!seen[a]) detail::fail(o, cpath, "missing subset " + format_subset(a, points) + " (the table must be total)");
  return detail::delegate(o, cpath, [&] { return ClosureStructure(q, n, std::move(table), points); });
}

/// Subsets are listed by mask order; `quantale` is embedded unless a
/// reference string is given.
inline Json space_to_json(const ClosureStructure& c, const Json& quantale_ref = nullptr) {
  Json j;
  j["quantale"] = quantale_ref.is_null() ? quantale_to_json(c.quantale()) : quantale_ref;
  j["points"] = c.point_names();
  Json closure = Json::object();
  for (Subset a = 0; a < c.subsets(); ++a) {
    Json row = Json::array();
    for (std::size_t x = 0; x < c.points(); ++x) row.push_back(c.quantale().name(c(a, x)));
    closure[c.format(a)] = std::move(row);
  }
  j["closure"] = std::move(closure);
  return j;
}

// ---------------------------------------------------------------------------
// Maps

namespace detail {

inline std::vector<std::size_t> assignment(const Origin& o, const Json& j, const std::vector<std::string>& from,
                                           const std::vector<std::string>& to, const std::string& path) {
  if (!j.is_object()) detail::fail(o, path, "expected a map from points to points");
  std::vector<std::size_t> f(from.size(), to.size());
  for (const auto& [key, value] : j.items()) {
    const std::size_t x = index_of(o, Json(key), from, path + "." + key);
    if (f[x] != to.size()) detail::fail(o, path + "." + key, "assigned twice");
    f[x] = index_of(o, value, to, path + "." + key);
  }
  for (std::size_t x = 0; x < from.size(); ++x)
    if (f[x] == to.size()) detail::fail(o, path, "point '" + from[x] + "' is not assigned");
  return f;
}

inline Json assignment_to_json(const std::vector<std::size_t>& f, const std::vector<std::string>& from,
                               const std::vector<std::string>& to) {
  Json j = Json::object();
  for (std::size_t x = 0; x < f.size(); ++x) j[from[x]] = to[f[x]];
  return j;
}

}  // namespace detail

inline SpaceMap map_from_json(const Json& j, const Origin& o = {}) {
  auto [fj, fo] = detail::resolve(o, detail::require(o, j, "from", ""), "from");
  ClosureStructure from = space_from_json(fj, fo, fo.source == o.source ? "from" : "");
  auto [tj, to] = detail::resolve(o, detail::require(o, j, "to", ""), "to");
  ClosureStructure target = space_from_json(tj, to, to.source == o.source ? "to" : "", from.quantale_ptr());
  auto f = detail::assignment(o, detail::require(o, j, "assignment", ""), from.point_names(), target.point_names(),
                              "assignment");
  return SpaceMap(std::move(from), std::move(target), std::move(f));
}

inline Json map_to_json(const SpaceMap& m) {
  Json j;
  j["from"] = space_to_json(m.domain);
  j["to"] = space_to_json(m.codomain);
  j["assignment"] = detail::assignment_to_json(m.point_map, m.domain.point_names(), m.codomain.point_names());
  return j;
}

/// A family of maps out of one base set, for initial structures and limits.
struct MapFamily {
  QuantalePtr quantale;
  std::vector<std::string> points;
  std::vector<InitialSource> sources;
};

inline MapFamily map_family_from_json(const Json& j, const Origin& o = {}) {
  MapFamily fam;
  auto [qj, qo] = detail::resolve(o, detail::require(o, j, "quantale", ""), "quantale");
  fam.quantale = quantale_from_json(qj, qo, qo.source == o.source ? "quantale" : "");
  fam.points = detail::name_list(o, detail::require(o, j, "points", ""), "points");
  if (fam.points.size() > kMaxStructurePoints) size_limit("base set size", fam.points.size(), kMaxStructurePoints);
  const Json& maps = detail::require(o, j, "maps", "");
  if (!maps.is_array()) detail::fail(o, "maps", "expected a list");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string mp = "maps[" + std::to_string(i) + "]";
    auto [tj, to] = detail::resolve(o, detail::require(o, maps[i], "to", mp), mp + ".to");
    ClosureStructure target = space_from_json(tj, to, to.source == o.source ? mp + ".to" : "", fam.quantale);
    auto f = detail::assignment(o, detail::require(o, maps[i], "assignment", mp), fam.points, target.point_names(),
                                mp + ".assignment");
    fam.sources.push_back(InitialSource{std::move(f), std::move(target)});
  }
  return fam;
}

inline Json map_family_to_json(const MapFamily& fam) {
  Json j;
  j["quantale"] = quantale_to_json(*fam.quantale);
  j["points"] = fam.points;
  Json maps = Json::array();
  for (const auto& s : fam.sources)
    maps.push_back(Json{{"to", space_to_json(s.codomain)},
                        {"assignment", detail::assignment_to_json(s.map, fam.points, s.codomain.point_names())}});
  j["maps"] = std::move(maps);
  return j;
}

// ---------------------------------------------------------------------------
// Files

inline Origin origin_of(const std::filesystem::path& path) { return Origin{path.string(), path.parent_path()}; }

inline FiniteLattice load_lattice(const std::filesystem::path& p) {
  return lattice_from_json(detail::json_from_file(p), origin_of(p));
}
inline QuantalePtr load_quantale(const std::filesystem::path& p) {
  return quantale_from_json(detail::json_from_file(p), origin_of(p));
}
inline ClosureStructure load_space(const std::filesystem::path& p) {
  return space_from_json(detail::json_from_file(p), origin_of(p));
}
inline SpaceMap load_map(const std::filesystem::path& p) { return map_from_json(detail::json_from_file(p), origin_of(p)); }
inline MapFamily load_map_family(const std::filesystem::path& p) {
  return map_family_from_json(detail::json_from_file(p), origin_of(p));
}

}  // namespace vtop::io
