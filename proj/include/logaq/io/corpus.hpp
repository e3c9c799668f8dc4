#pragma once

// A corpus directory: one NAME.toml input per instance, optionally NAME.golden.json.

#include "logaq/io/report.hpp"
#include "logaq/kcomplex.hpp"
#include "logaq/logsurj.hpp"

#include <filesystem>
#include <fstream>
#include <future>

namespace logaq::io {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read \"" + p.string() + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CorpusEntry {
  std::string name;
  std::filesystem::path input;
  std::filesystem::path golden;  ///< may not exist
  InputSpec spec;
};

/// Entries sorted by name. Parse failures propagate as InputError naming the file.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("corpus directory \"" + dir.string() + "\" not found");
  std::vector<CorpusEntry> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".toml") continue;
    CorpusEntry c;
    c.name = e.path().stem().string();
    c.input = e.path();
    c.golden = dir / (c.name + ".golden.json");
    try {
      c.spec = parse_input(read_file(e.path()));
    } catch (const InputError& err) {
      throw InputError(e.path().filename().string() + ": " + err.what());
    }
    if (c.spec.meta.name.empty()) c.spec.meta.name = c.name;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

/// The report stored in golden files: H0..H2 with coefficients B.
inline std::string golden_text(const CorpusEntry& e) {
  PrelogMorphism f = build_morphism(e.spec);
  HomologyRun run = run_homology(f, FpModule::free(f.target.algebra, 1), {0, 1, 2});
  run.name = e.name;
  run.coefficients = "self";
  return to_json(run).dump(2) + "\n";
}

enum class Outcome { Pass = 0, Fail = 1, InputFailure = 2, Inconsistent = 3 };

struct SuiteResult {
  std::string instance;
  std::string suite;
  Outcome outcome = Outcome::Pass;
  std::vector<std::string> lines;  ///< one per check, "ok ..." or "FAIL ..."
};

namespace detail {

inline void absorb(SuiteResult& r, const CheckReport& c, const std::string& prefix = "") {
  for (const auto& [what, ok] : c.items) {
    r.lines.push_back((ok ? "ok   " : "FAIL ") + prefix + what);
    if (!ok && r.outcome == Outcome::Pass) r.outcome = Outcome::Fail;
  }
}

inline std::string dims_string(const std::optional<KDims>& d) {
  if (!d) return "infinite";
  return "(" + std::to_string(d->h0) + ", " + std::to_string(d->h1) + ", " + std::to_string(d->h2) + ")";
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"strict", "prop12", "jz", "edge", "choice", "golden"};
  return names;
}

/// Whether `suite` applies to the entry at all.
inline bool applies(const CorpusEntry& e, const std::string& suite) {
  if (suite == "golden") return std::filesystem::exists(e.golden);
  return e.spec.in_suite(suite);
}

inline SuiteResult run_suite(const CorpusEntry& e, const std::string& suite, const ReportOptions& opt = {}) {
  SuiteResult r{e.name, suite, Outcome::Pass, {}};
  try {
    PrelogMorphism f = build_morphism(e.spec);
    FpModule self = FpModule::free(f.target.algebra, 1);
    FpModule residue = residue_coefficients(f.target.algebra);
    if (suite == "strict") {
      detail::absorb(r, check_strict_reduction(f, self, opt), "T = B: ");
      detail::absorb(r, check_strict_reduction(f, residue, opt), "T = k: ");
    } else if (suite == "prop12") {
      for (Field k : {Field::rationals(), Field::prime(2)}) {
        PrelogMorphism g = build_morphism(e.spec, k);
        std::vector<std::pair<std::string, FpModule>> ts{{"B", FpModule::free(g.target.algebra, 1)},
                                                         {"k", residue_coefficients(g.target.algebra)}};
        for (const auto& [tn, t] : ts) {
          KClosedFormResult p = check_prop12(g, t);
          bool ok = p.passed;
          r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + k.name() + ", T = " + tn + ": direct " +
                            detail::dims_string(p.direct) + ", closed form " + detail::dims_string(p.closed));
          if (!ok) r.outcome = Outcome::Fail;
        }
      }
    } else if (suite == "jz") {
      detail::absorb(r, check_structure(f, self, opt), "T = B: ");
      if (dim_over_k(self)) detail::absorb(r, check_compatibility_sequence(f, residue, {}, opt), "T = k: ");
    } else if (suite == "edge") {
      detail::absorb(r, check_edge_identity(LogSurjection(f), opt));
    } else if (suite == "choice") {
      detail::absorb(r, check_choice_independence(f, self, opt));
    } else if (suite == "golden") {
      std::string expected = read_file(e.golden);
      bool ok = golden_text(e) == expected;
      r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + "report matches " + e.golden.filename().string());
      if (!ok) r.outcome = Outcome::Fail;
    } else {
      throw InputError("unknown suite \"" + suite + "\"");
    }
  } catch (const ConsistencyError& err) {
    r.outcome = Outcome::Inconsistent;
    r.lines.push_back(std::string("FAIL internal consistency: ") + err.what());
  } catch (const InputError& err) {
    r.outcome = Outcome::InputFailure;
    r.lines.push_back(std::string("FAIL input: ") + err.what());
  } catch (const std::invalid_argument& err) {
    r.outcome = Outcome::InputFailure;
    r.lines.push_back(std::string("FAIL input: ") + err.what());
  }
  return r;
}

/// Runs the suites over the corpus with up to `threads` instances at a time.
/// Results come back sorted by instance, then by suite order.
inline std::vector<SuiteResult> run_suites(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& suites,
                                           unsigned threads = 1, const ReportOptions& opt = {}) {
  std::vector<std::pair<const CorpusEntry*, std::string>> jobs;
  for (const auto& e : corpus)
    for (const auto& s : suites)
      if (applies(e, s)) jobs.emplace_back(&e, s);
  std::vector<SuiteResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) out[i] = run_suite(*jobs[i].first, jobs[i].second, opt);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& p : pool) p.get();
  return out;
}

}  // namespace logaq::io
