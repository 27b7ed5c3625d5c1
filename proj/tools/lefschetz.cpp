#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/constructions.hpp"
#include "lefschetz/definition.hpp"
#include "lefschetz/suite.hpp"

using namespace lefschetz;
using nlohmann::json;

namespace {

// Exit codes: verdicts 0/1/2, failures above.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitProbable = 2;
constexpr int kExitError = 3;
constexpr int kExitUsage = 4;

struct Options {
  bool json = false;
  std::size_t max_dim = kDefaultMaxQuotientDim;
  SearchConfig search;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::CertifiedYes: return kExitYes;
    case Verdict::CertifiedNo: return kExitNo;
    case Verdict::ProbableNo: return kExitProbable;
  }
  return kExitError;
}

void emit(const Options& opt, json j, const std::string& command, const std::function<void()>& human) {
  if (opt.json) {
    j["schema"] = 1;
    j["command"] = command;
    std::cout << j.dump(2) << "\n";
  } else {
    human();
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

HilbertSeries series_of(const json& j) {
  std::map<int, std::int64_t> coeffs;
  for (const auto& [deg, c] : j.items()) coeffs[std::stoi(deg)] = c.get<std::int64_t>();
  return HilbertSeries(coeffs);
}

std::string dense_string(const HilbertSeries& h) {
  std::string out;
  for (auto c : h.dense()) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out;
}

void print_report(const WitnessReport& r, const GradedModule& m, const std::string& indent = "") {
  std::cout << indent << "status: " << to_string(r.status) << "\n";
  if (r.witness) std::cout << indent << "witness: " << m.describe(*r.witness) << "\n";
  if (!r.obstruction.empty()) std::cout << indent << "obstruction: " << r.obstruction << "\n";
  std::cout << indent << "profile: " << r.profile.to_string() << "\n";
  std::cout << indent << "candidates tested: " << r.candidates_tested << "\n";
}

json report_json(const WitnessReport& r, const GradedModule& m) {
  json j = to_json(r);
  if (r.witness) j["form"] = m.describe(*r.witness);
  return j;
}

struct Loaded {
  Definition def;
  GradedAlgebra algebra;
};

Loaded load(const std::string& path, const Options& opt) {
  Definition def = load_definition(path);
  GradedAlgebra a = build_algebra(def, opt.max_dim);
  return Loaded{std::move(def), std::move(a)};
}

LinearForm form_arg(const Loaded& l, const std::string& text) {
  return l.algebra.form_of(resolve_form(l.def, text));
}

int cmd_hilbert(const std::string& file, const Options& opt) {
  Loaded l = load(file, opt);
  HilbertSeries h = hilbert_series(l.algebra.module);
  SpernerData s = sperner_data(h);
  json j{{"hilbert", to_json(h)},
         {"dense", h.dense()},
         {"sperner", s.sperner},
         {"cosperner", s.cosperner},
         {"sperner_vector", s.sperner_vector},
         {"symmetric", s.symmetric},
         {"unimodal", s.unimodal},
         {"reflecting_degree", s.reflecting_degree ? json(s.reflecting_degree->get_str()) : json(nullptr)}};
  emit(opt, j, "hilbert", [&] {
    std::cout << dense_string(h) << "\n";
    std::cout << "series: " << to_string(h) << "\n";
    std::cout << "degrees: " << h.min_degree() << ".." << h.max_degree() << "\n";
    std::cout << "sperner: " << s.sperner << "\n";
    std::cout << "cosperner: " << s.cosperner << "\n";
    std::cout << "sperner vector:";
    for (auto v : s.sperner_vector) std::cout << " " << v;
    std::cout << "\nsymmetric: " << yes_no(s.symmetric) << "\nunimodal: " << yes_no(s.unimodal) << "\n";
    if (s.reflecting_degree) std::cout << "reflecting degree: " << s.reflecting_degree->get_str() << "\n";
  });
  return 0;
}

int cmd_check(const std::string& file, LefschetzMode mode, const Options& opt) {
  Loaded l = load(file, opt);
  WitnessReport r = find_lefschetz_witness(l.algebra.module, mode, opt.search);
  json j = report_json(r, l.algebra.module);
  j["mode"] = to_string(mode);
  emit(opt, j, "check", [&] {
    std::cout << "mode: " << to_string(mode) << "\n";
    print_report(r, l.algebra.module);
    std::cout << "hilbert: " << to_string(r.hilbert) << "\n";
  });
  return verdict_exit(r.status);
}

int cmd_jordan(const std::string& file, const std::string& form, const Options& opt) {
  Loaded l = load(file, opt);
  LinearForm z = form_arg(l, form);
  JordanProfile p = jordan_profile(l.algebra.module, z);
  json j{{"form", l.algebra.module.describe(z)}, {"profile", p.blocks()}};
  emit(opt, j, "jordan", [&] { std::cout << p.to_string() << "\n"; });
  return 0;
}

int cmd_gr(const std::string& file, const std::string& form, const Options& opt) {
  Loaded l = load(file, opt);
  LinearForm z = form_arg(l, form);
  AssociatedGraded gr = associated_graded(l.algebra, z);
  CheckReport c = check_associated_graded_equivalence(l.algebra, z, file, opt.search);
  json j{{"hilbert", to_json(hilbert_series(gr.algebra.module))},
         {"profile_z", jordan_profile(l.algebra.module, z).blocks()},
         {"profile_z_star", jordan_profile(gr.algebra.module, gr.z_star).blocks()},
         {"check", to_json(c)}};
  emit(opt, j, "gr", [&] {
    const GradedModule& g = gr.algebra.module;
    std::cout << "form: " << l.algebra.module.describe(z) << "\n";
    std::cout << "hilbert of Gr: " << to_string(hilbert_series(g)) << "\n";
    std::cout << "profile of z: " << jordan_profile(l.algebra.module, z).to_string() << "\n";
    std::cout << "profile of z*: " << jordan_profile(g, gr.z_star).to_string() << "\n";
    for (const char* mode : {"weak", "strong"}) {
      const json& d = c.details[mode];
      std::cout << mode << ": algebra " << d["algebra"]["status"].get<std::string>() << ", Gr "
                << d["graded"]["status"].get<std::string>() << "\n";
    }
    std::cout << "consistent: " << yes_no(c.consistent) << "\n";
  });
  return c.consistent ? 0 : kExitNo;
}

int cmd_csm(const std::string& file, const std::string& form, const Options& opt) {
  Loaded l = load(file, opt);
  LinearForm z = form_arg(l, form);
  CentralSimpleDecomposition d = central_simple_modules(l.algebra.module, z);
  json mods = json::array();
  for (std::size_t i = 0; i < d.modules.size(); ++i)
    mods.push_back({{"f", d.f_values[i]},
                    {"multiplicity", d.multiplicities[i]},
                    {"hilbert", to_json(hilbert_series(d.modules[i]))},
                    {"tilde_hilbert", to_json(hilbert_series(d.tilde_modules[i]))}});
  json j{{"form", l.algebra.module.describe(z)}, {"modules", mods}};
  emit(opt, j, "csm", [&] {
    std::cout << "form: " << l.algebra.module.describe(z) << "\n";
    for (std::size_t i = 0; i < d.modules.size(); ++i)
      std::cout << "U" << i + 1 << ": f=" << d.f_values[i] << " m=" << d.multiplicities[i]
                << " h=" << to_string(hilbert_series(d.modules[i]))
                << " tilde h=" << to_string(hilbert_series(d.tilde_modules[i])) << "\n";
  });
  return 0;
}

int cmd_tensor(const std::string& file_a, const std::string& file_b, const Options& opt) {
  Loaded a = load(file_a, opt), b = load(file_b, opt);
  CheckReport c = check_tensor_equivalence(a.algebra.module, b.algebra.module, file_a + " (x) " + file_b, opt.search);
  GradedModule vw = tensor_product(a.algebra.module, b.algebra.module);
  json j{{"hilbert", to_json(hilbert_series(vw))}, {"check", to_json(c)}};
  emit(opt, j, "tensor", [&] {
    std::cout << "hilbert: " << to_string(hilbert_series(vw)) << "\n";
    for (const char* side : {"left", "right", "product"}) {
      const json& d = c.details[side];
      std::cout << side << ": " << d["status"].get<std::string>();
      if (d.contains("form")) std::cout << " (" << d["form"].get<std::string>() << ")";
      std::cout << "\n";
    }
    std::cout << "sperner: " << c.details["sperner_product"] << " (strips give " << c.details["sperner_from_strips"]
              << ")\n";
    std::cout << "consistent: " << yes_no(c.consistent) << "\n";
  });
  return c.consistent ? 0 : kExitNo;
}

int cmd_powersum(int n, int a, const Options& opt) {
  FamilyLimits limits;
  limits.max_dim = opt.max_dim;
  CheckReport c = check_power_sum_family(n, a, opt.search, limits);
  emit(opt, to_json(c), "powersum", [&] {
    const json& fe = c.details["free_extension"]["details"];
    std::cout << "instance: " << c.instance << "\n";
    for (const char* part : {"base", "fiber", "total"}) {
      const json& d = fe[part];
      std::cout << part << ": " << d["status"].get<std::string>() << ", h = "
                << to_string(series_of(d["hilbert"]));
      if (d.contains("form")) std::cout << ", witness " << d["form"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "socle degree of base: " << c.details["socle_degree"] << "\n";
    std::cout << "E1 is a witness for the base: " << yes_no(c.details["e1_is_witness"].get<bool>()) << "\n";
    std::cout << "consistent: " << yes_no(c.consistent) << "\n";
  });
  return c.consistent ? 0 : kExitNo;
}

int cmd_xy(int r, int s, const Options& opt) {
  GradedAlgebra a = two_variable_monomial_ci(r, s, opt.max_dim);
  CheckReport c = check_monomial_xy(r, s);
  emit(opt, to_json(c), "xy", [&] {
    const json& d = c.details["report"];
    std::cout << "status: " << d["status"].get<std::string>() << "\n";
    if (d.contains("form")) std::cout << "witness: " << d["form"].get<std::string>() << "\n";
    std::cout << "profile: " << JordanProfile(d["profile"].get<std::vector<int>>()).to_string() << "\n";
    std::cout << "strips: " << JordanProfile(c.details["strip_decomposition"].get<std::vector<int>>()).to_string()
              << "\n";
  });
  return c.details["report"]["status"] == "certified_yes" ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& filter, const Options& opt) {
  auto results = run_suite(filter, opt.search);
  bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.consistent; });
  json list = json::array();
  for (const auto& r : results) list.push_back(to_json(r));
  emit(opt, json{{"results", list}, {"consistent", all}}, "verify", [&] {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.consistent;
      std::cout << (r.consistent ? "PASS " : "FAIL ") << r.theorem << " #" << r.ordinal << " " << r.instance;
      if (r.error) std::cout << " [" << *r.error << "]";
      std::cout << "\n";
    }
    std::cout << passed << "/" << results.size() << " consistent\n";
  });
  return all ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak and strong Lefschetz properties of graded Artinian algebras over Q"};
  app.require_subcommand(1);
  // Subcommands inherit this, so global options may also follow them.
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON (schema 1)");
  app.add_option("--max-dim", opt.max_dim, "Largest quotient dimension to build")->capture_default_str();
  app.add_option("--seed", opt.search.seed, "Seed for random candidate forms")->capture_default_str();
  app.add_option("--trials", opt.search.trials, "Number of random candidate forms")->capture_default_str();
  app.add_option("--bound", opt.search.bound, "Coefficient bound for random forms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string file, file_b, form, filter;
  int n = 0, a = 0, r = 0, s = 0;
  bool weak = false, strong = false;
  std::function<int()> action;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and Sperner data");
  hilbert->add_option("file", file, "Definition file")->required();
  hilbert->callback([&] { action = [&] { return cmd_hilbert(file, opt); }; });

  auto* check = app.add_subcommand("check", "Search for a Lefschetz element");
  check->add_option("file", file, "Definition file")->required();
  auto* wf = check->add_flag("--weak", weak, "Weak Lefschetz property");
  auto* sf = check->add_flag("--strong", strong, "Strong Lefschetz property");
  wf->excludes(sf);
  check->callback([&] {
    if (!weak && !strong) throw CLI::RequiredError("--weak or --strong");
    action = [&] { return cmd_check(file, strong ? LefschetzMode::Strong : LefschetzMode::Weak, opt); };
  });

  for (auto [name, help] : {std::pair{"jordan", "Jordan profile of multiplication by a form"},
                            std::pair{"gr", "Associated graded ring with respect to a form"},
                            std::pair{"csm", "Central simple modules of (A, form)"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Definition file")->required();
    sub->add_option("--form", form, "Form name from the file or an expression")->required();
    std::string cmd = name;
    sub->callback([&, cmd] {
      action = [&, cmd] {
        if (cmd == "jordan") return cmd_jordan(file, form, opt);
        if (cmd == "gr") return cmd_gr(file, form, opt);
        return cmd_csm(file, form, opt);
      };
    });
  }

  auto* tensor = app.add_subcommand("tensor", "Compare SLP of two algebras with their tensor product");
  tensor->add_option("file_a", file, "First definition file")->required();
  tensor->add_option("file_b", file_b, "Second definition file")->required();
  tensor->callback([&] { action = [&] { return cmd_tensor(file, file_b, opt); }; });

  auto* powersum = app.add_subcommand("powersum", "Power-sum complete intersection and its invariant subring");
  powersum->add_option("--n", n, "Number of variables")->required();
  powersum->add_option("--a", a, "Lowest power-sum degree")->required();
  powersum->callback([&] { action = [&] { return cmd_powersum(n, a, opt); }; });

  auto* xy = app.add_subcommand("xy", "Certify X+Y on K[X,Y]/(X^r, Y^s)");
  xy->add_option("--r", r, "Exponent of X")->required();
  xy->add_option("--s", s, "Exponent of Y")->required();
  xy->callback([&] { action = [&] { return cmd_xy(r, s, opt); }; });

  auto* verify = app.add_subcommand("verify", "Run the built-in verification corpus");
  verify->add_option("--filter", filter, "Only checks with this identifier");
  verify->callback([&] { action = [&] { return cmd_verify(filter, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
