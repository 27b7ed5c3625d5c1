#include "lefschetz/suite.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

GradedAlgebra monomial_ci(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  return algebra_from_strings(make_ring(vars), gens);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

NamedAlgebra named(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  return NamedAlgebra{"K[" + join(vars) + "]/(" + join(gens) + ")", monomial_ci(vars, gens)};
}

std::pair<int, int> theorem_key(const std::string& id) {
  auto dot = id.find('.');
  return {std::stoi(id.substr(0, dot)), std::stoi(id.substr(dot + 1))};
}

std::vector<LinearForm> basis_forms(const GradedModule& m) {
  std::vector<LinearForm> out;
  for (std::size_t k = 0; k < m.linear_count(); ++k) {
    LinearForm f{RationalVector(m.linear_count())};
    f.coefficients[k] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<NamedAlgebra> cross_check_corpus() {
  std::vector<NamedAlgebra> out;
  out.push_back(named({"x", "y"}, {"x^2", "y^2"}));
  out.push_back(named({"x", "y"}, {"x^2", "y^3"}));
  out.push_back(named({"x", "y"}, {"x^3", "y^3"}));
  out.push_back(named({"x", "y"}, {"x^2", "y^4"}));
  out.push_back(named({"x", "y"}, {"x^2", "x*y", "y^2"}));
  out.push_back(named({"x", "y", "z"}, {"x^2", "y^2", "z^2"}));
  out.push_back(named({"x", "y", "z"}, {"x^2", "y^2", "z^3"}));
  FreeExtensionInstance ex = non_slp_base_instance();
  out.push_back(NamedAlgebra{"K[E1, E2]/(E1^2, E2^2), weights 1, 2", ex.base});
  out.push_back(NamedAlgebra{"K[x1, x2]/(e1^2, e2^2)", ex.total});
  for (auto [n, a] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    FreeExtensionInstance ps = power_sum_ci(n, a);
    out.push_back(NamedAlgebra{"power-sum base n=" + std::to_string(n) + " a=" + std::to_string(a), ps.base});
  }
  return out;
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"theorem", r.theorem}, {"ordinal", r.ordinal}, {"instance", r.instance}, {"consistent", r.consistent}};
  if (r.error) j["error"] = *r.error;
  if (!r.report.is_null()) j["report"] = r.report;
  return j;
}

std::vector<std::string> suite_theorems() {
  return {check_id::kThickening,    check_id::kTensor,        check_id::kAssociatedGraded,
          check_id::kCentralSimple, check_id::kGorensteinCentralSimple, check_id::kFreeExtension,
          check_id::kPowerSum,      check_id::kEmbeddingDimension,      check_id::kMonomialXY};
}

std::vector<SuiteEntry> verification_corpus() {
  std::vector<SuiteEntry> out;
  auto add = [&](const std::string& theorem, std::string instance, std::function<CheckReport(const SearchConfig&)> run) {
    std::size_t ordinal = std::count_if(out.begin(), out.end(), [&](const SuiteEntry& e) { return e.theorem == theorem; });
    out.push_back(SuiteEntry{theorem, ordinal + 1, std::move(instance), std::move(run)});
  };

  // Thickenings.
  for (int d = 1; d <= 5; ++d) {
    std::string name = "K[x]/(x^" + std::to_string(d) + ")";
    add(check_id::kThickening, name, [d, name](const SearchConfig& cfg) {
      return check_thickening_equivalence(truncated_polynomial_module(d, "x"), name, cfg);
    });
  }
  add(check_id::kThickening, "K[x, y]/(x^2, y^2)", [](const SearchConfig& cfg) {
    return check_thickening_equivalence(monomial_ci({"x", "y"}, {"x^2", "y^2"}).module, "K[x, y]/(x^2, y^2)", cfg);
  });
  add(check_id::kThickening, "K[E1, E2]/(E1^2, E2^2)", [](const SearchConfig& cfg) {
    return check_thickening_equivalence(non_slp_base_instance().base.module, "K[E1, E2]/(E1^2, E2^2)", cfg);
  });

  // Tensor products.
  add(check_id::kTensor, "K[x]/(x^2) (x) K[y]/(y^2)", [](const SearchConfig& cfg) {
    return check_tensor_equivalence(truncated_polynomial_module(2, "x"), truncated_polynomial_module(2, "y"),
                                    "K[x]/(x^2) (x) K[y]/(y^2)", cfg);
  });
  add(check_id::kTensor, "K[x]/(x^3) (x) K[x, y]/(x^2, y^2)", [](const SearchConfig& cfg) {
    return check_tensor_equivalence(truncated_polynomial_module(3, "x"), monomial_ci({"x", "y"}, {"x^2", "y^2"}).module,
                                    "K[x]/(x^3) (x) K[x, y]/(x^2, y^2)", cfg);
  });
  add(check_id::kTensor, "K[E1, E2]/(E1^2, E2^2) (x) K[t]/(t^2)", [](const SearchConfig& cfg) {
    return check_tensor_equivalence(non_slp_base_instance().base.module, truncated_polynomial_module(2),
                                    "K[E1, E2]/(E1^2, E2^2) (x) K[t]/(t^2)", cfg);
  });

  // Associated graded rings and central simple modules, every basis form.
  for (const auto& a : cross_check_corpus()) {
    for (const auto& z : basis_forms(a.algebra.module)) {
      std::string name = a.name + ", z = " + a.algebra.module.describe(z);
      auto alg = std::make_shared<const GradedAlgebra>(a.algebra);
      add(check_id::kAssociatedGraded, name, [alg, z, name](const SearchConfig& cfg) {
        return check_associated_graded_equivalence(*alg, z, name, cfg);
      });
      add(check_id::kCentralSimple, name, [alg, z, name](const SearchConfig& cfg) {
        return check_central_simple_criterion(*alg, z, name, cfg);
      });
      if (is_gorenstein(a.algebra.module))
        add(check_id::kGorensteinCentralSimple, name, [alg, z, name](const SearchConfig& cfg) {
          return check_gorenstein_central_simple(*alg, z, name, cfg);
        });
    }
  }

  // Free extensions.
  add(check_id::kFreeExtension, "K[x1, x2]/(e1^2, e2^2) over K[E1, E2]/(E1^2, E2^2)",
      [](const SearchConfig& cfg) { return check_free_extension(non_slp_base_instance(), cfg); });
  for (auto [n, a] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    add(check_id::kFreeExtension, "power-sum n=" + std::to_string(n) + " a=" + std::to_string(a),
        [n, a](const SearchConfig& cfg) { return check_free_extension(power_sum_ci(n, a), cfg); });
  }
  add(check_id::kFreeExtension, "E1^2, E3, E2^3 over n=3",
      [](const SearchConfig& cfg) { return check_free_extension(square_of_e1_instance(), cfg); });

  // Power sums.
  for (auto [n, a] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    add(check_id::kPowerSum, "power-sum n=" + std::to_string(n) + " a=" + std::to_string(a),
        [n, a](const SearchConfig& cfg) { return check_power_sum_family(n, a, cfg); });
  }

  // Embedding dimension one.
  add(check_id::kEmbeddingDimension, "generic n=3 d=5", [](const SearchConfig& cfg) {
    return check_embedding_dimension_criterion(generic_embedding_one_instance(3, 5, cfg.seed), 5, cfg);
  });
  add(check_id::kEmbeddingDimension, "generic n=3 d=7", [](const SearchConfig& cfg) {
    return check_embedding_dimension_criterion(generic_embedding_one_instance(3, 7, cfg.seed), 7, cfg);
  });
  add(check_id::kEmbeddingDimension, "E1^2, E3, E2^3 over n=3",
      [](const SearchConfig& cfg) { return check_embedding_dimension_criterion(square_of_e1_instance(), 6, cfg); });

  // X+Y on K[X,Y]/(X^r, Y^s).
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= 6; ++s)
      add(check_id::kMonomialXY, "X^" + std::to_string(r) + ", Y^" + std::to_string(s),
          [r, s](const SearchConfig&) { return check_monomial_xy(r, s); });

  std::stable_sort(out.begin(), out.end(), [](const SuiteEntry& x, const SuiteEntry& y) {
    return std::make_pair(theorem_key(x.theorem), x.ordinal) < std::make_pair(theorem_key(y.theorem), y.ordinal);
  });
  return out;
}

std::vector<SuiteResult> run_suite(const std::string& filter, const SearchConfig& search) {
  auto ids = suite_theorems();
  if (!filter.empty() && std::find(ids.begin(), ids.end(), filter) == ids.end())
    throw Error(ErrorKind::OutOfRange, "unknown filter '" + filter + "'; expected one of " + join(ids));
  std::vector<SuiteResult> out;
  for (const auto& entry : verification_corpus()) {
    if (!filter.empty() && entry.theorem != filter) continue;
    SuiteResult r;
    r.theorem = entry.theorem;
    r.ordinal = entry.ordinal;
    r.instance = entry.instance;
    try {
      CheckReport report = entry.run(search);
      r.consistent = report.consistent;
      r.report = to_json(report);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lefschetz
