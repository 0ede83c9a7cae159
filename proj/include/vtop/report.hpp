#pragma once

// Deterministic JSON report: one record per check with its verdict, witness
// and optional timing, a command-specific result, and a summary. Keys keep
// insertion order, so equal inputs give byte-identical documents apart from
// the elapsed_ms fields, which --no-timing drops.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "vtop/check_report.hpp"
#include "vtop/io.hpp"
#include "vtop/suite.hpp"

namespace vtop {

struct ReportRecord {
  std::string id;
  bool pass = true;
  bool exploratory = false;
  std::optional<std::uint64_t> cases;
  io::Json witness;  // null when absent
  std::string note;
  std::optional<double> elapsed_ms;
};

/// Names used to print witnesses: subset masks over `points`, elements of `q`.
struct WitnessNames {
  std::vector<std::string> points;
  const Quantale* quantale = nullptr;

  static WitnessNames of(const ClosureStructure& c) { return {c.point_names(), &c.quantale()}; }
};

inline io::Json witness_to_json(const Witness& w, const WitnessNames& names = {}) {
  io::Json j;
  j["axiom"] = w.axiom;
  if (names.points.empty()) {
    j["A"] = w.a;
    j["B"] = w.b;
    j["x"] = w.x;
  } else {
    j["A"] = format_subset(w.a, names.points);
    j["B"] = format_subset(w.b, names.points);
    j["x"] = w.x < names.points.size() ? io::Json(names.points[w.x]) : io::Json(w.x);
  }
  if (names.quantale && w.lhs < names.quantale->size() && w.rhs < names.quantale->size()) {
    j["lhs"] = names.quantale->name(w.lhs);
    j["rhs"] = names.quantale->name(w.rhs);
  } else {
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
  }
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_input(const std::string& key, io::Json value) { inputs_[key] = std::move(value); }
  void set_result(io::Json result) { result_ = std::move(result); }
  void add(ReportRecord r) { records_.push_back(std::move(r)); }

  void add_check(const CheckReport& report, const WitnessNames& names = {}, const std::string& prefix = {},
                 bool exploratory = false) {
    for (const auto& item : report.items) {
      ReportRecord r{prefix + item.id, item.pass, exploratory, std::nullopt, nullptr, item.note, std::nullopt};
      if (item.witness) r.witness = witness_to_json(*item.witness, names);
      add(std::move(r));
    }
  }

  void add_suite(const std::vector<SuiteRecord>& records) {
    for (const auto& s : records) {
      ReportRecord r{s.id, s.pass, s.exploratory, s.cases, nullptr, s.note, s.elapsed_ms};
      if (s.witness) r.witness = witness_to_json(*s.witness);
      add(std::move(r));
    }
  }

  const std::vector<ReportRecord>& records() const noexcept { return records_; }

  /// True when no non-exploratory record failed.
  bool passed() const {
    for (const auto& r : records_)
      if (!r.pass && !r.exploratory) return false;
    return true;
  }

  io::Json to_json(bool timing = true) const {
    io::Json j;
    j["command"] = command_;
    if (!inputs_.empty()) j["inputs"] = inputs_;
    io::Json recs = io::Json::array();
    std::size_t passed = 0, failed = 0, exploratory = 0;
    for (const auto& r : records_) {
      io::Json rec;
      rec["id"] = r.id;
      rec["verdict"] = r.pass ? "pass" : "fail";
      if (r.exploratory) rec["exploratory"] = true;
      if (r.cases) rec["cases"] = *r.cases;
      if (!r.witness.is_null()) rec["witness"] = r.witness;
      if (!r.note.empty()) rec["note"] = r.note;
      if (timing && r.elapsed_ms) rec["elapsed_ms"] = std::round(*r.elapsed_ms * 1000.0) / 1000.0;
      recs.push_back(std::move(rec));
      if (r.exploratory)
        ++exploratory;
      else if (r.pass)
        ++passed;
      else
        ++failed;
    }
    j["records"] = std::move(recs);
    if (!result_.is_null()) j["result"] = result_;
    j["summary"] = io::Json{{"records", records_.size()},
                            {"passed", passed},
                            {"failed", failed},
                            {"exploratory", exploratory},
                            {"status", failed == 0 ? "pass" : "fail"}};
    return j;
  }

  std::string render(bool timing = true) const { return to_json(timing).dump(2) + "\n"; }

 private:
  std::string command_;
  io::Json inputs_ = io::Json::object();
  std::vector<ReportRecord> records_;
  io::Json result_;
};

}  // namespace vtop
