// Acceptance run: one line per criterion, checked against the reference
// implementations in oracles.hpp. Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "vtop/vtop.hpp"

using namespace vtop;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::uint64_t cases = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

std::vector<ClosureStructure> tables_where(const QuantalePtr& q, std::size_t n,
                                           const std::function<bool(const ClosureStructure&)>& keep) {
  std::vector<ClosureStructure> out;
  oracle::each_table(q, n, [&](const ClosureStructure& c) {
    if (keep(c)) out.push_back(c);
  });
  return out;
}

bool oracle_closure(const ClosureStructure& c) { return oracle::R(c) && oracle::T(c); }
bool oracle_topological(const ClosureStructure& c) { return oracle_closure(c) && oracle::A(c); }

// f : (Y, d) -> (X, c) continuous iff d(A)(y) <= c(fA)(fy) everywhere.
bool oracle_continuous(const ClosureStructure& d, const ClosureStructure& c, const std::vector<std::size_t>& f) {
  for (Subset a = 0; a < d.subsets(); ++a) {
    Subset image = 0;
    for (std::size_t y = 0; y < d.points(); ++y)
      if ((a >> y) & 1u) image |= Subset{1} << f[y];
    for (std::size_t y = 0; y < d.points(); ++y)
      if (!c.quantale().leq(d(a, y), c(image, f[y]))) return false;
  }
  return true;
}

// Level sets c^v A = {x : v <= (cA)(x)}, laid out v-major.
std::vector<Subset> oracle_levels(const ClosureStructure& c) {
  const auto& q = c.quantale();
  std::vector<Subset> out;
  for (Elem v = 0; v < q.size(); ++v)
    for (Subset a = 0; a < c.subsets(); ++a) {
      Subset s = 0;
      for (std::size_t x = 0; x < c.points(); ++x)
        if (q.leq(v, c(a, x))) s |= Subset{1} << x;
      out.push_back(s);
    }
  return out;
}

std::vector<Subset> levels_of(const LevelFamily& f) {
  std::vector<Subset> out;
  for (Elem v = 0; v < f.quantale().size(); ++v)
    for (Subset a = 0; a < f.subsets(); ++a) out.push_back(f(v, a));
  return out;
}

// Criterion 1. For monotone c: (R) gives c <= bar c; (T) iff bar c <= c; and
// bar d <= bar c for every table d <= c. bar is cached for every table so the
// third clause runs over all pairs.
Outcome bar_lemma() {
  Outcome o;
  std::uint64_t pairs = 0, expected_pairs = 0;
  for (const auto& [name, q] : quantales::small_catalog()) {
    const std::size_t m = q->size();
    std::vector<std::vector<Elem>> bars;
    std::vector<std::size_t> monotone;
    oracle::each_table(q, 2, [&](const ClosureStructure& c) {
      const auto b = bar(c);
      o.require(b.table() == oracle::bar(c).table(), name + ": bar differs from the reference");
      if (oracle::monotone(c)) monotone.push_back(bars.size());
      bars.push_back(b.table());
    });
    auto decode = [&](std::size_t code) {
      ClosureStructure c(q, 2);
      for (auto& v : c.mutable_table()) {
        v = static_cast<Elem>(code % m);
        code /= m;
      }
      return c;
    };
    auto leq_tables = [&](const std::vector<Elem>& s, const std::vector<Elem>& t) {
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!q->leq(s[i], t[i])) return false;
      return true;
    };
    for (std::size_t code : monotone) {
      const ClosureStructure c = decode(code);
      const auto& bc = bars[code];
      ++o.cases;
      if (oracle::R(c)) o.require(leq_tables(c.table(), bc), name + ": (R) but c not below bar c");
      o.require(oracle::T(c) == leq_tables(bc, c.table()), name + ": (T) and bar c <= c disagree");
      // Every d <= c, as a mixed-radix odometer over the down-sets of the entries.
      const auto& t = c.table();
      std::vector<std::vector<Elem>> down(t.size());
      std::vector<std::size_t> weight(t.size(), 1);
      std::uint64_t below = 1;
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (Elem v = 0; v < m; ++v)
          if (q->leq(v, t[i])) down[i].push_back(v);
        if (i) weight[i] = weight[i - 1] * m;
        below *= down[i].size();
      }
      expected_pairs += below;
      std::vector<std::size_t> pos(t.size(), 0);
      std::size_t d = 0;
      for (std::size_t i = 0; i < t.size(); ++i) d += down[i][0] * weight[i];
      while (true) {
        ++pairs;
        if (!leq_tables(bars[d], bc)) {
          o.fail(name + ": d <= c but bar d not below bar c");
          break;
        }
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
          d -= down[i][pos[i]] * weight[i];
          if (++pos[i] < down[i].size()) {
            d += down[i][pos[i]] * weight[i];
            break;
          }
          pos[i] = 0;
          d += down[i][0] * weight[i];
        }
        if (i == t.size()) break;
      }
    }
  }
  o.require(pairs == expected_pairs, "pair enumeration incomplete");
  if (o.pass) o.detail = std::to_string(pairs) + " pairs d <= c";
  return o;
}

// Criterion 2. core(c) against the largest topological structure below c,
// found by scanning the full table space.
Outcome core_maximum() {
  Outcome o;
  for (const auto& q : {quantales::two(), quantales::free_on_idempotent()}) {
    const auto spaces = tables_where(q, 2, oracle_closure);
    const auto topologies = tables_where(q, 2, oracle_topological);
    for (const auto& c : spaces) {
      ++o.cases;
      const auto best = oracle::maximum_below(c, topologies);
      o.require(best.has_value(), "no largest topological structure below a closure space");
      if (best) o.require(core(c).table() == best->table(), "core differs from the maximum");
    }
  }
  return o;
}

// Criterion 3. Sampled core theorem at three points.
Outcome core_direct() {
  Outcome o;
  for (const auto& [name, q] : quantales::small_catalog()) {
    if (!is_spatial(*q)) continue;
    Rng rng(4242);
    std::size_t probes = 0;
    for (int i = 0; i < 1000; ++i) {
      const ClosureStructure c = random_closure_space(q, 3, rng);
      ++o.cases;
      o.require(oracle_closure(c), name + ": sampler produced a non-closure space");
      const ClosureStructure plus = core(c);
      o.require(oracle_topological(plus), name + ": core is not topological");
      o.require(oracle::leq(plus, c), name + ": core not below c");
      o.require(oracle_continuous(plus, c, {0, 1, 2}), name + ": counit not continuous");
      if (i % 5 == 0) {
        const CoreProbe p = make_core_probe(c, rng);
        ++probes;
        o.require(oracle_topological(p.domain) && oracle_continuous(p.domain, c, p.map),
                  name + ": malformed probe");
        o.require(oracle_continuous(p.domain, plus, p.map), name + ": universal property fails");
      }
    }
    o.require(probes == 200, name + ": probe count");
  }
  return o;
}

// Criterion 4. Finite-lattice theorem over the catalog members of size <= 7.
Outcome lattice_theorem() {
  Outcome o;
  for (const auto& [name, L] : lattices::catalog()) {
    if (L.size() > 7) continue;
    ++o.cases;
    const bool sg = is_sup_generated_by_coprimes(L).holds(), cf = is_coframe(L).holds, cd = is_ccd(L).holds;
    o.require(sg == oracle::sup_generated(L) && cf == oracle::coframe(L) && cd == oracle::ccd(L),
              name + ": predicate differs from the reference");
    o.require(sg == cf && cf == cd, name + ": predicates disagree");
    for (Elem x = 0; x < L.size(); ++x)
      for (Elem a = 0; a < L.size(); ++a)
        o.require(way_below(L, x, a) == L.leq(x, a) && way_below_by_directed_sets(L, x, a) == L.leq(x, a),
                  name + ": way below differs from <=");
  }
  return o;
}

// Criterion 5. Conditions (i), (ii), (iii), the composite equality and the
// recovery formula on every table at two points, |V| <= 3.
Outcome vcat_conditions() {
  Outcome o;
  std::set<std::size_t> sizes;
  for (const auto& [name, q] : quantales::catalog()) {
    if (q->size() > 3) continue;
    sizes.insert(q->size());
    oracle::each_table(q, 2, [&](const ClosureStructure& c) {
      ++o.cases;
      const bool closure = oracle_closure(c);
      const auto r = check_prop51(c);
      o.require(r.i == closure && r.ii == closure && r.iii == closure, name + ": conditions (i), (ii), (iii) disagree");
      const auto rep = check_cor53_and_recover(c);
      o.require(rep.pass("composites_agree") == closure, name + ": composite equality disagrees");
      if (closure) o.require(rep.pass("recovery"), name + ": recovery fails");
    });
  }
  o.require(sizes == std::set<std::size_t>{1, 2, 3}, "catalog lacks a quantale of some size <= 3");
  return o;
}

// Criterion 6. Level-family roundtrips at two points, then 50 seeded one-entry
// mutations classified against the set of all valid families.
Outcome level_families() {
  Outcome o;
  Rng rng(6);
  std::size_t invalid = 0;
  for (const auto& [name, q] : quantales::small_catalog()) {
    std::set<std::vector<Subset>> valid;
    std::vector<LevelFamily> families;
    oracle::each_table(q, 2, [&](const ClosureStructure& c) {
      if (!oracle_closure(c)) return;
      ++o.cases;
      const LevelFamily f = to_levels(c);
      o.require(levels_of(f) == oracle_levels(c), name + ": level sets differ from the reference");
      o.require(check_levels(f).passed(), name + ": valid family rejected");
      o.require(from_levels(f).table() == c.table(), name + ": roundtrip changes c");
      valid.insert(levels_of(f));
      families.push_back(f);
    });
    for (int i = 0; i < 10; ++i) {
      LevelFamily f = families[rng.below(families.size())];
      const auto v = static_cast<Elem>(rng.below(q->size()));
      const auto a = static_cast<Subset>(rng.below(4));
      f.set(v, a, f(v, a) ^ static_cast<Subset>(1 + rng.below(3)));
      const bool ok = valid.count(levels_of(f)) > 0;
      const auto report = check_levels(f);
      o.require(report.passed() == ok, name + ": mutated family misclassified");
      if (ok) continue;
      ++invalid;
      for (const auto& item : report.items)
        o.require(item.pass || item.witness.has_value(), name + ": violation without witness");
      try {
        from_levels(f);
        o.fail(name + ": from_levels accepted an invalid family");
      } catch (const Error& e) {
        o.require(e.kind() == ErrorKind::LevelsInvalid, name + ": wrong error kind");
      }
    }
  }
  o.require(invalid > 0, "no mutation produced an invalid family");
  if (o.pass) o.detail = std::to_string(invalid) + " of 50 mutations invalid";
  return o;
}

// Criterion 7. Every metric on at most four points with distances in {0,1,2}.
Outcome approach_metrics() {
  Outcome o;
  const auto q = quantales::lawvere_chain(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      DistanceMatrix d(n, std::vector<std::size_t>(n, 0));
      std::size_t rest = code;
      for (const auto& [x, y] : pairs) {
        d[x][y] = d[y][x] = rest % 3;
        rest /= 3;
      }
      bool metric = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) metric = metric && d[x][z] <= d[x][y] + d[y][z];
      if (!metric) continue;
      ++o.cases;
      const ClosureStructure c = approach_from_metric(d, 2, q);
      for (Subset a = 0; a < c.subsets(); ++a)
        for (std::size_t x = 0; x < n; ++x) {
          std::size_t dist = quantales::kInfinity;
          for (std::size_t y = 0; y < n; ++y)
            if ((a >> y) & 1u) dist = std::min(dist, d[x][y]);
          o.require(c(a, x) == quantales::lawvere_index(2, dist), "point-set distance differs");
        }
      o.require(oracle_topological(c), "metric structure fails R, T or A");
    }
  }
  return o;
}

// Criterion 8. Set-cover core against the string-cover core.
Outcome cover_reduction() {
  Outcome o;
  oracle::each_table(quantales::two(), 2, [&](const ClosureStructure& c) {
    ++o.cases;
    o.require(core(c).table() == oracle::core_strings(c).table(), "set-cover core differs from string-cover core");
  });
  return o;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = "cd '" VTOP_FIXTURES "' && '" VTOP_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Criterion 9. Golden outputs, byte for byte without timing, and equal modulo
// the timing field across two timed runs.
Outcome cli_goldens() {
  Outcome o;
  const std::pair<const char*, const char*> goldens[] = {
      {"check_sierpinski.json", "check --space sierpinski.space"},
      {"check_nonadditive3.json", "check --space nonadditive3.space"},
      {"check_sierpinski_swap.json", "check --space sierpinski.space --map sierpinski_swap.map --strict"},
      {"core_nonadditive3.json", "core --space nonadditive3.space"},
      {"core_approach3.json", "core --space approach3.space"},
      {"lattice_report_m3.json", "lattice-report --lattice m3.lattice"},
      {"lattice_report_boolean4.json", "lattice-report --lattice boolean4.lattice"},
  };
  static const std::regex elapsed(R"(,\n\s*"elapsed_ms": [0-9.e+-]+)");
  for (const auto& [file, args] : goldens) {
    ++o.cases;
    const std::string golden = slurp(fs::path(VTOP_GOLDEN) / file);
    o.require(!golden.empty(), std::string(file) + ": golden missing");
    o.require(run_cli(std::string(args) + " --no-timing").out == golden, std::string(file) + ": output differs");
    const auto a = std::regex_replace(run_cli(args).out, elapsed, "");
    const auto b = std::regex_replace(run_cli(args).out, elapsed, "");
    o.require(a == b && a == golden, std::string(file) + ": timed runs differ");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "bar lemma, all tables at |X|=2, |V|<=4", 60, bar_lemma},
      {2, "core equals maximum topological structure below c, |X|=2", 300, core_maximum},
      {3, "core theorem on 1000 random closure spaces per quantale, |X|=3", 300, core_direct},
      {4, "coprime sup-generation, coframe and ccd coincide; way below is <=", 10, lattice_theorem},
      {5, "closure conditions via V-Cat coincide on all tables, |X|=2, |V|<=3", 120, vcat_conditions},
      {6, "level families: roundtrips and mutation witnesses", 60, level_families},
      {7, "metrics on <=4 points give approach structures", 30, approach_metrics},
      {8, "set-cover core equals string-cover core over the 2-chain", 60, cover_reduction},
      {9, "CLI golden files byte-stable", 120, cli_goldens},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > c.budget_s) o.fail("over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    all = all && o.pass;
    std::printf("criterion %d %s  %-70s cases=%llu time=%.2fs%s%s\n", c.number, o.pass ? "PASS" : "FAIL",
                c.title.c_str(), static_cast<unsigned long long>(o.cases), s, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
