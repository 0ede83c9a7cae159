// Batch front end: parses lattice, quantale, space and map files, runs checks
// and constructions, and writes a JSON report.
//
// Exit status: 0 when every check passed, 1 when a check failed (witnesses
// are in the report), 2 on usage, parse or validation errors of the input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "vtop/vtop.hpp"

namespace {

using vtop::io::Json;

struct Options {
  std::string lattice, quantale, space, maps, map;
  std::string out;
  std::size_t cap_x = 0, cap_v = 0;
  std::uint64_t seed = 0;
  std::size_t points = 2, direct_points = 3, samples = 1000, probes = 200, max_results = 100000;
  bool coprime_only = false, exploratory = false, no_timing = false, strict = false;

  vtop::Caps caps() const {
    vtop::Caps c;
    if (cap_x != 0) c.core_points = c.oracle_points = c.pset_points = cap_x;
    if (cap_v != 0) c.exhaustive_values = c.enumerate_elements = cap_v;
    return c;
  }
};

/// Raised for command-line mistakes; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string file_label(const std::string& path) { return std::filesystem::path(path).filename().string(); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
  return value;
}

/// A quantale file, or builtin:KIND[:N] (e.g. builtin:lawvere_chain:2).
vtop::QuantalePtr load_quantale(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string kind = spec.substr(prefix.size());
    std::size_t n = 0;
    if (auto colon = kind.find(':'); colon != std::string::npos) {
      try {
        n = std::stoul(kind.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("bad builtin parameter in '" + spec + "'");
      }
      kind.resize(colon);
    }
    try {
      return vtop::quantales::by_name(kind, n);
    } catch (const vtop::Error& e) {
      throw UsageError(e.what());
    }
  }
  return vtop::io::load_quantale(spec);
}

void require_spatial(const vtop::Quantale& q, const Options& opt, const char* command) {
  if (!opt.exploratory && !vtop::is_spatial(q))
    throw UsageError(std::string(command) +
                     ": quantale is not sup-generated by coprimes; rerun with --exploratory to evaluate anyway");
}

Json table_json(const vtop::ClosureStructure& c) {
  Json j = vtop::io::space_to_json(c);
  j.erase("quantale");
  return j;
}

void add_error_record(vtop::Report& report, const std::string& id, const vtop::Error& e) {
  vtop::ReportRecord r{id, false, false, std::nullopt, nullptr, e.what(), std::nullopt};
  r.witness = Json{{"kind", std::string(vtop::to_string(e.kind()))}, {"indices", e.witness()}};
  report.add(std::move(r));
}

// ---------------------------------------------------------------------------
// Commands

void run_validate(const Options& opt, vtop::Report& report) {
  if (opt.lattice.empty() && opt.quantale.empty() && opt.space.empty() && opt.map.empty() && opt.maps.empty())
    throw UsageError("validate needs at least one of --lattice, --quantale, --space, --map, --maps");
  auto attempt = [&](const std::string& id, const std::string& path, auto&& load) {
    if (path.empty()) return;
    report.set_input(id, file_label(path));
    try {
      std::string note = load();
      report.add({id, true, false, std::nullopt, nullptr, note, std::nullopt});
    } catch (const vtop::Error& e) {
      if (e.kind() == vtop::ErrorKind::ParseError) throw;
      add_error_record(report, id, e);
    }
  };
  attempt("lattice", opt.lattice, [&] {
    const auto L = vtop::io::load_lattice(opt.lattice);
    return std::to_string(L.size()) + " elements";
  });
  attempt("quantale", opt.quantale, [&] {
    const auto q = load_quantale(opt.quantale);
    const auto cls = vtop::classify(*q);
    return std::to_string(q->size()) + " elements" + (cls.integral ? ", integral" : "") +
           (cls.commutative ? ", commutative" : "") +
           (cls.lattice_spatial ? ", sup-generated by coprimes" : ", not sup-generated by coprimes");
  });
  attempt("space", opt.space, [&] {
    const auto c = vtop::io::load_space(opt.space);
    return std::to_string(c.points()) + " points over " + std::to_string(c.quantale().size()) + " values";
  });
  attempt("map", opt.map, [&] {
    const auto m = vtop::io::load_map(opt.map);
    return std::to_string(m.domain.points()) + " to " + std::to_string(m.codomain.points()) + " points";
  });
  attempt("maps", opt.maps, [&] {
    const auto fam = vtop::io::load_map_family(opt.maps);
    return std::to_string(fam.sources.size()) + " maps";
  });
}

void run_check(const Options& opt, vtop::Report& report) {
  if (opt.space.empty() && opt.map.empty()) throw UsageError("check needs --space or --map");
  if (!opt.space.empty()) {
    report.set_input("space", file_label(opt.space));
    const auto c = vtop::io::load_space(opt.space);
    const auto names = vtop::WitnessNames::of(c);
    report.add_check(vtop::check_axioms(c), names);
    const auto p = vtop::check_prop51(c);
    auto fact = [&](const std::string& id, bool holds, const std::string& note) {
      report.add({id, true, false, std::nullopt, nullptr, note + (holds ? ": holds" : ": does not hold"), std::nullopt});
    };
    fact("vcat.closure", p.i, "(R) and (T)");
    fact("vcat.hom_below", p.ii, "c_disc <= c and [c_disc B, cA] <= [cB, cA]");
    fact("vcat.hom_equal", p.iii, "[c_disc B, cA] = [cB, cA]");
    vtop::CheckReport agree{"vcat conditions", {}};
    agree.add_bool("vcat.coincide", p.coincide(), vtop::Witness{"vcat.coincide", 0, 0, 0, 0, 0, "conditions differ"});
    report.add_check(agree);
  }
  if (!opt.map.empty()) {
    report.set_input("map", file_label(opt.map));
    const auto m = vtop::io::load_map(opt.map);
    report.add_check(vtop::check_continuous(m, false), vtop::WitnessNames::of(m.domain));
    if (opt.strict) report.add_check(vtop::check_continuous(m, true), vtop::WitnessNames::of(m.domain));
  }
}

void run_bar(const Options& opt, vtop::Report& report) {
  report.set_input("space", file_label(need(opt.space, "--space")));
  const auto c = vtop::io::load_space(opt.space);
  const auto b = vtop::bar(c, opt.coprime_only);
  report.add({"bar", true, false, std::nullopt, nullptr, opt.coprime_only ? "coprime values only" : "all values",
              std::nullopt});
  report.set_result(table_json(b));
}

void run_core(const Options& opt, vtop::Report& report) {
  report.set_input("space", file_label(need(opt.space, "--space")));
  const auto c = vtop::io::load_space(opt.space);
  require_spatial(c.quantale(), opt, "core");
  const auto caps = opt.caps();
  const auto names = vtop::WitnessNames::of(c);
  report.add_check(vtop::check_core_theorem(c, {}, caps), names, {}, !vtop::is_spatial(c.quantale()));
  report.set_result(table_json(vtop::core(c, caps)));
}

void run_initial(const Options& opt, vtop::Report& report) {
  report.set_input("maps", file_label(need(opt.maps, "--maps")));
  const auto fam = vtop::io::load_map_family(opt.maps);
  const auto c0 = vtop::initial_structure(fam.quantale, fam.points.size(), fam.sources);
  const vtop::ClosureStructure c(fam.quantale, fam.points.size(), c0.table(), fam.points);
  const auto names = vtop::WitnessNames::of(c);
  vtop::CheckReport r{"initial", {}};
  r.add("R", vtop::reflexivity_violation(c));
  r.add("T", vtop::transitivity_violation(c));
  for (std::size_t i = 0; i < fam.sources.size(); ++i)
    r.add("map" + std::to_string(i) + ".C", vtop::continuity_violation(c, fam.sources[i].codomain, fam.sources[i].map));
  report.add_check(r, names);
  report.set_result(table_json(c));
}

void run_limit(const Options& opt, vtop::Report& report) {
  report.set_input("maps", file_label(need(opt.maps, "--maps")));
  const auto fam = vtop::io::load_map_family(opt.maps);
  require_spatial(*fam.quantale, opt, "limit");
  const auto caps = opt.caps();
  const auto c0 = vtop::vtop_limit(fam.quantale, fam.points.size(), fam.sources, caps);
  const vtop::ClosureStructure c(fam.quantale, fam.points.size(), c0.table(), fam.points);
  const auto names = vtop::WitnessNames::of(c);
  vtop::CheckReport r{"limit", {}};
  r.add("R", vtop::reflexivity_violation(c));
  r.add("T", vtop::transitivity_violation(c));
  r.add("A", vtop::additivity_violation(c));
  for (std::size_t i = 0; i < fam.sources.size(); ++i)
    r.add("map" + std::to_string(i) + ".C", vtop::continuity_violation(c, fam.sources[i].codomain, fam.sources[i].map));
  report.add_check(r, names, {}, !vtop::is_spatial(*fam.quantale));
  report.set_result(table_json(c));
}

void run_levels(const Options& opt, vtop::Report& report) {
  report.set_input("space", file_label(need(opt.space, "--space")));
  const auto c = vtop::io::load_space(opt.space);
  const auto names = vtop::WitnessNames::of(c);
  vtop::CheckReport input{"input", {}};
  input.add("R", vtop::reflexivity_violation(c));
  input.add("T", vtop::transitivity_violation(c));
  report.add_check(input, names, "input.");
  if (!input.passed()) return;
  const auto f = vtop::to_levels(c);
  report.add_check(vtop::check_levels(f, opt.caps()), names);
  vtop::CheckReport round{"roundtrip", {}};
  round.add_bool("roundtrip", vtop::from_levels_unchecked(f) == c,
                 vtop::Witness{"roundtrip", 0, 0, 0, 0, 0, "from_levels(to_levels(c)) differs from c"});
  report.add_check(round);
  Json levels = Json::object();
  const auto& q = c.quantale();
  for (std::size_t v = 0; v < q.size(); ++v) {
    Json row = Json::object();
    for (vtop::Subset a = 0; a < c.subsets(); ++a) row[c.format(a)] = c.format(f(static_cast<vtop::Elem>(v), a));
    levels[q.name(static_cast<vtop::Elem>(v))] = std::move(row);
  }
  report.set_result(Json{{"levels", std::move(levels)}});
}

vtop::FiniteLattice lattice_input(const Options& opt, vtop::Report& report) {
  if (!opt.lattice.empty()) {
    report.set_input("lattice", file_label(opt.lattice));
    return vtop::io::load_lattice(opt.lattice);
  }
  if (!opt.quantale.empty()) {
    report.set_input("quantale", file_label(opt.quantale));
    return load_quantale(opt.quantale)->lattice();
  }
  throw UsageError("missing required option --lattice");
}

void run_lattice_report(const Options& opt, vtop::Report& report) {
  const auto L = lattice_input(opt, report);
  const auto caps = opt.caps();
  const auto sup = vtop::is_sup_generated_by_coprimes(L);
  const auto coframe = vtop::is_coframe(L);
  const auto ccd = vtop::is_ccd(L, caps);

  Json coprimes = Json::array();
  for (std::size_t p = 0; p < L.size(); ++p)
    if (vtop::has(vtop::coprimes(L), static_cast<vtop::Elem>(p))) coprimes.push_back(L.name(static_cast<vtop::Elem>(p)));
  auto witness_names = [&](const auto& w) {
    Json out = Json::array();
    for (auto i : w) out.push_back(L.name(static_cast<vtop::Elem>(i)));
    return out;
  };
  auto verdict = [&](const vtop::LatticeVerdict& v) {
    Json j{{"holds", v.holds}};
    if (!v.holds) j["witness"] = witness_names(v.witness);
    return j;
  };
  Json result;
  result["size"] = L.size();
  result["coprimes"] = std::move(coprimes);
  result["sup_generated_by_coprimes"] = verdict(sup.by_joins);
  result["coprime_separation"] = verdict(sup.by_separation);
  result["coframe"] = verdict(coframe);
  result["ccd"] = verdict(ccd);

  vtop::CheckReport r{"lattice", {}};
  const bool agree = sup.holds() == coframe.holds && coframe.holds == ccd.holds;
  r.add_bool("equivalence", agree,
             vtop::Witness{"equivalence", 0, 0, 0, 0, 0, "sup-generation, coframe and ccd disagree"},
             "sup-generated by coprimes, coframe and ccd coincide");
  r.add_bool("separation", sup.by_joins.holds == sup.by_separation.holds,
             vtop::Witness{"separation", 0, 0, 0, 0, 0, "join and separation criteria disagree"});
  std::optional<vtop::Witness> wb;
  for (std::size_t x = 0; x < L.size() && !wb; ++x)
    for (std::size_t a = 0; a < L.size(); ++a) {
      const auto ex = static_cast<vtop::Elem>(x), ea = static_cast<vtop::Elem>(a);
      if (vtop::way_below_by_directed_sets(L, ex, ea, caps) != L.leq(ex, ea)) {
        wb = vtop::Witness{"way_below", 0, 0, x, ex, ea, L.name(ex) + " vs " + L.name(ea)};
        break;
      }
    }
  r.add("way_below", wb, "way-below coincides with the order");
  if (sup.holds()) {
    const auto e = vtop::spatial_embedding(L);
    result["embedding"] = Json{{"injective", e.injective},
                               {"preserves_binary_meets", e.preserves_binary_meets},
                               {"preserves_binary_joins", e.preserves_binary_joins}};
    r.add_bool("embedding", e.injective && e.preserves_binary_meets && e.preserves_binary_joins,
               vtop::Witness{"embedding", 0, 0, 0, 0, 0, "coprime embedding is not a lattice embedding"},
               "embedding into the powerset of coprimes");
  } else {
    r.add("embedding", std::nullopt, "vacuous: not sup-generated by coprimes");
  }
  report.add_check(r);
  report.set_result(std::move(result));
}

void run_enumerate(const Options& opt, vtop::Report& report) {
  const auto L = lattice_input(opt, report);
  const auto found = vtop::enumerate_quantales(L, opt.max_results, opt.caps());
  Json list = Json::array();
  for (const auto& q : found) {
    Json j = vtop::io::quantale_to_json(q);
    j.erase("lattice");
    const auto cls = vtop::classify(q);
    j["integral"] = cls.integral;
    j["commutative"] = cls.commutative;
    list.push_back(std::move(j));
  }
  report.add({"enumeration", true, false, found.size(), nullptr,
              found.size() == opt.max_results ? "truncated at --max" : "complete", std::nullopt});
  report.set_result(Json{{"count", found.size()}, {"quantales", std::move(list)}});
}

vtop::SuiteOptions suite_options(const Options& opt) {
  vtop::SuiteOptions s;
  s.points = opt.points;
  s.direct_points = opt.direct_points;
  s.seed = opt.seed;
  s.samples = opt.samples;
  s.probes = opt.probes;
  s.caps = opt.caps();
  return s;
}

void run_verify(const Options& opt, vtop::Report& report) {
  report.set_input("quantale", file_label(need(opt.quantale, "--quantale")));
  report.set_input("seed", opt.seed);
  const auto q = load_quantale(opt.quantale);
  require_spatial(*q, opt, "verify-theorems");
  report.add_suite(vtop::verify_theorems(q, suite_options(opt)));
}

void run_search(const Options& opt, vtop::Report& report) {
  report.set_input("quantale", file_label(need(opt.quantale, "--quantale")));
  report.set_input("seed", opt.seed);
  const auto q = load_quantale(opt.quantale);
  const auto records = vtop::search_counterexample(q, suite_options(opt));
  std::size_t found = 0;
  for (const auto& r : records) found += r.pass ? 0 : 1;
  report.add_suite(records);
  report.set_result(Json{{"spatial", vtop::is_spatial(*q)}, {"claims_refuted", found}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks and constructions for closure structures valued in finite quantales"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write the report here instead of stdout");
    sub->add_option("--cap-x", opt.cap_x, "Cap on base set sizes for brute-force paths");
    sub->add_option("--cap-v", opt.cap_v, "Cap on quantale sizes for brute-force paths");
    sub->add_flag("--no-timing", opt.no_timing, "Omit elapsed_ms fields");
  };
  auto suite = [&](CLI::App* sub) {
    sub->add_option("--quantale", opt.quantale, "Quantale file or builtin:KIND[:N]");
    sub->add_option("--seed", opt.seed, "Seed for random sampling");
    sub->add_option("--points", opt.points, "Base set size for table-space claims");
    sub->add_option("--direct-points", opt.direct_points, "Base set size for the sampled core suite");
    sub->add_option("--samples", opt.samples, "Random structures per sampled claim");
    sub->add_option("--probes", opt.probes, "Universal-property probes");
    sub->add_flag("--exploratory", opt.exploratory, "Allow quantales not sup-generated by coprimes");
  };

  auto* validate = app.add_subcommand("validate", "Check lattice, quantale, space or map files");
  validate->add_option("--lattice", opt.lattice, "Lattice file");
  validate->add_option("--quantale", opt.quantale, "Quantale file or builtin:KIND[:N]");
  validate->add_option("--space", opt.space, "Space file");
  validate->add_option("--map", opt.map, "Map file");
  validate->add_option("--maps", opt.maps, "Map-family file");
  common(validate);

  auto* check = app.add_subcommand("check", "Axioms R, T, A, monotonicity, continuity and the V-Cat conditions");
  check->add_option("--space", opt.space, "Space file");
  check->add_option("--map", opt.map, "Map file; adds the continuity check");
  check->add_flag("--strict", opt.strict, "Also check closure-preserving (equality) continuity");
  common(check);

  auto* bar = app.add_subcommand("bar", "The bar operator");
  bar->add_option("--space", opt.space, "Space file");
  bar->add_flag("--coprime-only", opt.coprime_only, "Join over coprime values only");
  common(bar);

  auto* core = app.add_subcommand("core", "Largest topological structure below a closure structure");
  core->add_option("--space", opt.space, "Space file");
  core->add_flag("--exploratory", opt.exploratory);
  common(core);

  auto* initial = app.add_subcommand("initial", "Initial structure of a family of maps");
  initial->add_option("--maps", opt.maps, "Map-family file");
  common(initial);

  auto* limit = app.add_subcommand("limit", "Limit among topological structures");
  limit->add_option("--maps", opt.maps, "Map-family file");
  limit->add_flag("--exploratory", opt.exploratory);
  common(limit);

  auto* levels = app.add_subcommand("levels", "Level-set family of a closure structure");
  levels->add_option("--space", opt.space, "Space file");
  common(levels);

  auto* lreport = app.add_subcommand("lattice-report", "Coprimes, coframe, ccd and the coprime embedding");
  lreport->add_option("--lattice", opt.lattice, "Lattice file");
  lreport->add_option("--quantale", opt.quantale, "Quantale file; reports its underlying lattice");
  common(lreport);

  auto* enumerate = app.add_subcommand("enumerate-quantales", "All quantale structures on a lattice");
  enumerate->add_option("--lattice", opt.lattice, "Lattice file");
  enumerate->add_option("--quantale", opt.quantale, "Use the lattice of this quantale");
  enumerate->add_option("--max", opt.max_results, "Stop after this many results");
  common(enumerate);

  auto* verify = app.add_subcommand("verify-theorems", "Full theorem regression suite for a quantale");
  suite(verify);
  common(verify);

  auto* search = app.add_subcommand("search-counterexample", "Evaluate hypothesis-dependent claims as data");
  suite(search);
  common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  vtop::Report report(cmd);
  try {
    if (cmd == "validate") run_validate(opt, report);
    else if (cmd == "check") run_check(opt, report);
    else if (cmd == "bar") run_bar(opt, report);
    else if (cmd == "core") run_core(opt, report);
    else if (cmd == "initial") run_initial(opt, report);
    else if (cmd == "limit") run_limit(opt, report);
    else if (cmd == "levels") run_levels(opt, report);
    else if (cmd == "lattice-report") run_lattice_report(opt, report);
    else if (cmd == "enumerate-quantales") run_enumerate(opt, report);
    else if (cmd == "verify-theorems") run_verify(opt, report);
    else if (cmd == "search-counterexample") run_search(opt, report);
  } catch (const UsageError& e) {
    std::cerr << "vtop: " << e.what() << "\n";
    return 2;
  } catch (const vtop::Error& e) {
    std::cerr << "vtop: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.render(!opt.no_timing);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "vtop: cannot write " << opt.out << "\n";
      return 2;
    }
    out << text;
  }
  return report.passed() ? 0 : 1;
}
