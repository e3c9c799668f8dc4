#include "CLI11.hpp"
#include "logaq/io/corpus.hpp"
#include "logaq/logaq.hpp"

#include <iostream>

using namespace logaq;
using namespace logaq::io;

namespace {

struct Common {
  std::string input;
  std::string coefficients = "self";
  std::string characteristic;
  std::string format = "text";
  std::string degrees;
};

std::optional<Field> field_override(const std::string& c) {
  if (c.empty()) return std::nullopt;
  if (c == "0") return Field::rationals();
  try {
    return parse_field("F" + c);
  } catch (const std::invalid_argument&) {
    throw InputError("unsupported characteristic \"" + c + "\"");
  }
}

std::vector<int> parse_degrees(const std::string& text, int lo, int hi) {
  std::vector<int> out;
  if (text.empty()) {
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t dash = part.find('-');
    try {
      int a = std::stoi(part.substr(0, dash));
      int b = dash == std::string::npos ? a : std::stoi(part.substr(dash + 1));
      for (int i = a; i <= b; ++i) {
        if (i < lo || i > hi)
          throw InputError("degree " + std::to_string(i) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
        if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
      }
    } catch (const std::logic_error&) {
      throw InputError("cannot read degrees \"" + text + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrelogMorphism load(const Common& c, InputSpec* spec = nullptr) {
  InputSpec s = parse_input(read_file(c.input));
  if (s.meta.name.empty()) s.meta.name = std::filesystem::path(c.input).stem().string();
  PrelogMorphism f = build_morphism(s, field_override(c.characteristic));
  if (spec) *spec = s;
  return f;
}

FpModule coefficients(const Common& c, const PrelogMorphism& f) {
  if (c.coefficients == "self") return FpModule::free(f.target.algebra, 1);
  if (c.coefficients == "residue") return residue_coefficients(f.target.algebra);
  return parse_module(read_file(c.coefficients), f.target.algebra);
}

std::string coefficient_label(const Common& c) {
  if (c.coefficients == "self" || c.coefficients == "residue") return c.coefficients;
  return std::filesystem::path(c.coefficients).filename().string();
}

void add_common(CLI::App* cmd, Common& c, bool with_coefficients, bool with_degrees) {
  cmd->add_option("input", c.input, "input file")->required();
  if (with_coefficients)
    cmd->add_option("--coefficients", c.coefficients, "self, residue, or a module file")->capture_default_str();
  if (with_degrees) cmd->add_option("--degrees", c.degrees, "comma separated degrees or ranges, e.g. 0,1 or 0-2");
  cmd->add_option("--char", c.characteristic, "recompute over characteristic 0 or a prime");
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void print_report(const std::string& title, const HomologyReport& r, const std::string& format) {
  if (format == "json")
    std::cout << Json{{"name", title}, {"report", to_json(r)}}.dump(2) << "\n";
  else
    std::cout << title << ": " << summary(r) << "\n";
}

int cmd_homology(const Common& c, bool alt) {
  InputSpec spec;
  PrelogMorphism f = load(c, &spec);
  FpModule t = coefficients(c, f);
  std::vector<int> degrees = parse_degrees(c.degrees, 0, 2);
  HomologyRun base = run_homology(f, t, degrees);
  base.name = spec.meta.name;
  base.coefficients = coefficient_label(c);
  if (c.format == "json") {
    Json j = to_json(base);
    if (alt) {
      Json alts = Json::array();
      for (const auto& [label, ch] : alternative_choices(f)) {
        HomologyRun r = run_homology(f, t, degrees, ch);
        r.name = label;
        r.coefficients = base.coefficients;
        bool same = true;
        for (int i : degrees) same = same && same_proxies(base.reports.at(i), r.reports.at(i));
        Json a = to_json(r);
        a["agrees"] = same;
        alts.push_back(a);
      }
      j["alternatives"] = alts;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << to_text(base);
  if (!alt) return 0;
  bool all_same = true;
  for (const auto& [label, ch] : alternative_choices(f)) {
    HomologyRun r = run_homology(f, t, degrees, ch);
    bool same = true;
    for (int i : degrees) same = same && same_proxies(base.reports.at(i), r.reports.at(i));
    all_same = all_same && same;
    std::cout << "  " << (same ? "same" : "DIFFERENT") << " under " << label << "\n";
  }
  return all_same ? 0 : 1;
}

int cmd_kcomplex(const Common& c) {
  PrelogMorphism f = load(c);
  FpModule t = coefficients(c, f);
  KClosedFormResult p = check_prop12(f, t);
  auto dims = [](const KDims& d) { return Json::array({d.h0, d.h1, d.h2}); };
  if (c.format == "json") {
    Json j{{"closed_form", dims(p.closed)}, {"direct", p.direct ? dims(*p.direct) : Json(nullptr)}, {"agree", p.passed}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "K direct: " << io::detail::dims_string(p.direct) << "\n"
              << "K closed form: " << io::detail::dims_string(p.closed) << "\n"
              << (p.passed ? "agree" : "DISAGREE") << "\n";
  }
  return p.passed ? 0 : 1;
}

int cmd_conormal(const Common& c) {
  LogSurjection s(load(c));
  print_report("conormal module", make_report(conormal_module(s)), c.format);
  return 0;
}

int cmd_tor(const Common& c) {
  LogSurjection s(load(c));
  for (int n : parse_degrees(c.degrees, 0, 4)) print_report("Tor" + std::to_string(n), tor_over_c(s, n), c.format);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& dir, unsigned threads, bool update, const std::string& format) {
  std::vector<CorpusEntry> corpus = load_corpus(dir);
  if (update) {
    for (const auto& e : corpus) {
      std::ofstream out(e.golden, std::ios::binary);
      out << golden_text(e);
      std::cout << "wrote " << e.golden.filename().string() << "\n";
    }
    return 0;
  }
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites = {suite};
  std::vector<SuiteResult> results = run_suites(corpus, suites, threads);
  Outcome worst = Outcome::Pass;
  const SuiteResult* first_failure = nullptr;
  Json all = Json::array();
  for (const auto& r : results) {
    if (r.outcome != Outcome::Pass && !first_failure) first_failure = &r;
    worst = std::max(worst, r.outcome);
    if (format == "json") {
      all.push_back(Json{{"instance", r.instance}, {"suite", r.suite}, {"passed", r.outcome == Outcome::Pass},
                         {"checks", r.lines}});
    } else {
      std::cout << (r.outcome == Outcome::Pass ? "PASS " : "FAIL ") << r.suite << " " << r.instance << "\n";
      for (const auto& l : r.lines) std::cout << "    " << l << "\n";
    }
  }
  if (format == "json") std::cout << all.dump(2) << "\n";
  if (results.empty()) {
    std::cerr << "no corpus instance belongs to suite " << suite << "\n";
    return 1;
  }
  if (first_failure) {
    std::cerr << "first failing instance: " << first_failure->instance << " (" << first_failure->suite << ")\n";
    return static_cast<int>(worst);
  }
  std::cerr << results.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log Andre-Quillen homology in degrees 0, 1, 2"};
  app.require_subcommand(1);

  Common hc, kc, cc, tc;
  bool alt = false;
  auto* homology = app.add_subcommand("homology", "H0, H1, H2 of the log complex");
  add_common(homology, hc, true, true);
  homology->add_flag("--alt-choices", alt, "recompute under alternative presentations and compare");

  auto* kcomplex = app.add_subcommand("kcomplex", "the monoid complex K against its closed form");
  add_common(kcomplex, kc, true, false);
  auto* conormal = app.add_subcommand("conormal", "the conormal module of a log surjection");
  add_common(conormal, cc, false, false);
  auto* tor = app.add_subcommand("tor", "Tor over the source of a log surjection, degrees 0..4");
  add_common(tor, tc, false, true);

  std::string suite, corpus_dir = LOGAQ_CORPUS_DIR, vformat = "text";
  unsigned threads = 1;
  bool update = false;
  auto* verify = app.add_subcommand("verify", "run a check suite over the corpus");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "strict, prop12, jz, edge, choice, golden or all")
      ->required()
      ->check(CLI::IsMember(choices));
  verify->add_option("--corpus", corpus_dir, "corpus directory")->capture_default_str();
  verify->add_option("--threads", threads, "instances run in parallel")->check(CLI::Range(1u, 256u));
  verify->add_flag("--update-goldens", update, "rewrite the golden files instead of checking");
  verify->add_option("--format", vformat, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*homology) return cmd_homology(hc, alt);
    if (*kcomplex) return cmd_kcomplex(kc);
    if (*conormal) return cmd_conormal(cc);
    if (*tor) return cmd_tor(tc);
    if (*verify) return cmd_verify(suite, corpus_dir, threads, update, vformat);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
