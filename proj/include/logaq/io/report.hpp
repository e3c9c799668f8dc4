#pragma once

// Reports as JSON trees (sorted keys) and as plain text.

#include "json.hpp"
#include "logaq/io/input.hpp"
#include "logaq/logls.hpp"

#include <chrono>
#include <iomanip>

namespace logaq::io {

using Json = nlohmann::json;

inline Json to_json(const HomologyReport& r) {
  Json j;
  j["generators"] = r.n_gens;
  j["relations"] = r.relations;
  j["k_dim"] = r.k_dim ? Json(*r.k_dim) : Json("infinite");
  j["shifts"] = r.shifts ? Json(*r.shifts) : Json(nullptr);
  j["hilbert_series"] = r.hilbert ? Json(r.hilbert->to_string()) : Json(nullptr);
  Json fit = Json::array();
  for (const auto& f : r.fitting) {
    Json x;
    x["index"] = f.index;
    x["generators"] = f.generators;
    x["unit"] = f.is_unit;
    x["zero"] = f.is_zero;
    fit.push_back(x);
  }
  j["fitting_ideals"] = fit;
  j["fitting_complete"] = r.fitting_complete;
  return j;
}

inline std::string ideal_choice_name(IdealChoice c) {
  switch (c) {
    case IdealChoice::GroebnerBasis: return "groebner";
    case IdealChoice::RawGenerators: return "raw";
    case IdealChoice::ExtraGenerator: return "extra";
    case IdealChoice::Reversed: return "reversed";
  }
  return "?";
}

/// Element of a monoid written additively: "2a + b".
inline std::string monoid_element_string(const FpMonoid& m, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += (e[i] == 1 ? "" : std::to_string(e[i])) + m.gens[i];
  }
  return s.empty() ? "0" : s;
}

struct HomologyRun {
  std::string name;
  std::string field;
  std::string coefficients;
  std::vector<int> degrees;
  std::vector<std::pair<std::string, std::string>> x;  ///< adjoined variable, element of N
  std::vector<std::string> y;
  std::string ideal_choice;
  std::vector<std::string> ideal_generators;
  std::size_t binomials = 0;  ///< generators of the kernel of k[P0] -> k[N]
  std::map<int, HomologyReport> reports;
  double seconds = 0;
};

inline HomologyRun run_homology(const PrelogMorphism& f, const FpModule& t, const std::vector<int>& degrees,
                                const LogChoices& choices = {}, const ReportOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  HomologyRun run;
  run.field = f.field().name();
  run.degrees = degrees;
  Diagram1 d = build_diagram1(f, choices);
  for (std::size_t i = 0; i < d.fac.n_x; ++i)
    run.x.emplace_back(d.fac.x_names[i], monoid_element_string(f.target.monoid, d.fac.x_elements[i]));
  const PolyRing& rr = d.fac.r->ring();
  for (std::size_t i = 0; i < d.fac.n_y; ++i) run.y.push_back(rr.names()[d.fac.y_var(i)]);
  run.ideal_choice = ideal_choice_name(choices.ideal);
  for (const auto& p : d.front.tau) run.ideal_generators.push_back(rr.to_string(p));
  run.binomials = d.mon.pi.size();
  Complex3 c = assemble_log_ls(d).complex.with_coefficients(t);
  for (int i : degrees) {
    if (i < 0 || i > 2) throw std::out_of_range("degrees must lie in 0..2");
    run.reports[i] = make_report(c.homology(i), opt);
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

/// The machine form; timing is left out so that it is byte-stable.
inline Json to_json(const HomologyRun& run) {
  Json j;
  j["name"] = run.name;
  j["field"] = run.field;
  j["coefficients"] = run.coefficients;
  Json x = Json::array();
  for (const auto& [n, e] : run.x) x.push_back(Json{{"variable", n}, {"element", e}});
  j["choices"] = Json{{"X", x}, {"Y", run.y}, {"ideal", run.ideal_choice}, {"ideal_generators", run.ideal_generators},
                      {"monoid_binomials", run.binomials}};
  Json h = Json::object();
  for (const auto& [i, r] : run.reports) h["H" + std::to_string(i)] = to_json(r);
  j["homology"] = h;
  return j;
}

inline std::string summary(const HomologyReport& r) {
  if (r.is_zero()) return "0";
  std::string s = r.k_dim ? "dim " + std::to_string(*r.k_dim) : "infinite dim";
  if (auto rank = r.fitting_rank(); rank && !r.k_dim) s += ", rank " + std::to_string(*rank);
  s += ", " + std::to_string(r.n_gens) + (r.n_gens == 1 ? " generator" : " generators");
  if (r.hilbert) s += ", Hilbert series " + r.hilbert->to_string();
  return s;
}

inline std::string to_text(const HomologyRun& run, bool timing = true) {
  std::ostringstream os;
  os << (run.name.empty() ? "instance" : run.name) << " over " << run.field << ", coefficients " << run.coefficients
     << "\n";
  os << "  X:";
  for (const auto& [n, e] : run.x) os << " " << n << " -> " << e << ";";
  os << "\n  Y:";
  for (const auto& y : run.y) os << " " << y;
  os << "\n  ideal (" << run.ideal_choice << "):";
  for (const auto& g : run.ideal_generators) os << " " << g << ";";
  os << "\n";
  for (const auto& [i, r] : run.reports) {
    os << "  H" << i << ": " << summary(r) << "\n";
    for (const auto& rel : r.relations) {
      os << "    (";
      for (std::size_t k = 0; k < rel.size(); ++k) os << (k ? ", " : "") << rel[k];
      os << ")\n";
    }
  }
  if (timing) os << "  time: " << std::fixed << std::setprecision(3) << run.seconds << " s\n";
  return os.str();
}

inline Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& [what, ok] : r.items) items.push_back(Json{{"check", what}, {"passed", ok}});
  return Json{{"name", r.name}, {"passed", r.passed()}, {"items", items}};
}

}  // namespace logaq::io
