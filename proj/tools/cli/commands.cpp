#include "commands.hpp"

#include <gmp.h>

#include <algorithm>
#include <future>
#include <thread>

#include "polyharm/boundary.hpp"
#include "polyharm/error.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/polyalg.hpp"
#include "polyharm/polytext.hpp"
#include "polyharm/solver.hpp"
#include "polyharm/suites.hpp"

#ifndef POLYHARM_VERSION
#define POLYHARM_VERSION "unknown"
#endif

namespace polyharm::cli {

namespace {

using nlohmann::json;

std::string coords_text(std::span<const double> coords) {
  std::string out;
  for (double c : coords) out += (out.empty() ? "" : " ") + format_double(c);
  return out;
}

std::string complex_text(const ComplexVector& z) {
  std::string out;
  for (const Complex& c : z.entries()) {
    out += (out.empty() ? "" : " ") + ("(" + format_double(c.real()) + "," + format_double(c.imag()) + ")");
  }
  return out;
}

std::string point_label(const RotatedVector& x) {
  if (x.angle() == 0.0) return coords_text(x.coords());
  return "e^{i*" + format_double(x.angle()) + "} " + coords_text(x.coords());
}

std::string parse_message(const ParseError& e) {
  return e.what();
}

// Evaluates into a row, mapping singular and domain errors to row states.
template <class F>
void guarded(ResultRow& row, F&& f) {
  try {
    f();
  } catch (const SingularEvaluation& e) {
    row.status = RowStatus::kSingular;
    row.note = e.what();
    row.value.reset();
    row.error.reset();
    row.bound.reset();
  } catch (const DomainError& e) {
    row.status = RowStatus::kRejected;
    row.note = e.what();
    row.value.reset();
    row.error.reset();
    row.bound.reset();
  }
}

}  // namespace

ResultTable cmd_kernel(const RunConfig& config, const WarningSink& warn) {
  const int n = config.integer("n");
  const int p = config.integer("p");
  if (config.has("x") && config.has("points")) throw ConfigError("give either 'x' or 'points'");
  if (config.has("zeta") && config.has("zetas")) throw ConfigError("give either 'zeta' or 'zetas'");
  std::vector<RotatedVector> xs, zetas;
  if (config.has("points")) {
    xs = config.points("points");
  } else if (config.has("x")) {
    xs.push_back(config.point(config.effective()["x"]));
  } else {
    RealVector v(n, 0.0);
    v[0] = 0.5;
    xs.push_back(RotatedVector::real(std::move(v)));
  }
  if (config.has("zetas")) {
    zetas = config.points("zetas");
  } else if (config.has("zeta")) {
    zetas.push_back(config.point(config.effective()["zeta"]));
  } else {
    RealVector v(n, 0.0);
    v[0] = 1.0;
    zetas.push_back(RotatedVector::real(std::move(v)));
  }
  const auto degrees = config.integers("degrees");
  const double series_tol = config.number("series_tolerance");
  const auto tol = config.tolerance();

  ResultTable table({"x", "zeta", "kernel", "route", "m"});
  for (const auto& x : xs) {
    for (const auto& zeta : zetas) {
      const std::string xl = point_label(x), zl = point_label(zeta);
      for (int m : degrees) {
        std::vector<Complex> values;
        bool ok = true;
        for (ZonalRoute route : kAllRoutes) {
          ResultRow row{{xl, zl, "zonal", route_name(route), std::to_string(m)}};
          guarded(row, [&] { row.value = zonal_polyharmonic({n, p, m}, x, zeta, route); });
          ok &= row.value.has_value();
          if (row.value) values.push_back(*row.value);
          table.add(std::move(row));
        }
        if (!ok) continue;
        double scale = std::pow(x.radius(), m);
        for (const auto& v : values) scale = std::max(scale, std::abs(v));
        double gap = 0.0;
        for (std::size_t a = 0; a < values.size(); ++a) {
          for (std::size_t b = a + 1; b < values.size(); ++b) gap = std::max(gap, std::abs(values[a] - values[b]));
        }
        ResultRow row{{xl, zl, "zonal", "route-gap", std::to_string(m)}};
        row.error = scale > 0.0 ? gap / scale : gap;
        row.bound = tol.value_or(1e-10);
        row.note = "relative to max(|Z|, |x|^m)";
        table.add(std::move(row));
      }

      ResultRow closed{{xl, zl, "poisson", "closed-form", ""}};
      guarded(closed, [&] { closed.value = poisson_kernel(n, p, x, zeta); });
      const bool have_closed = closed.value.has_value();
      const Complex closed_value = closed.value.value_or(Complex{});
      table.add(std::move(closed));
      if (have_closed && x.radius() < 1.0 - 1e-6) {
        ResultRow series{{xl, zl, "poisson", "series", ""}};
        guarded(series, [&] {
          const KernelValue s = poisson_kernel_series(n, p, x, zeta, series_tol);
          series.value = s.value;
          series.reference = closed_value;
          series.error = std::abs(s.value - closed_value);
          series.bound = tol.value_or(1e-8);
          series.note = std::to_string(s.terms_used) + " terms";
        });
        table.add(std::move(series));
        ResultRow gegen{{xl, zl, "poisson", "gegenbauer-series", ""}};
        guarded(gegen, [&] {
          const KernelValue g = poisson_kernel_gegenbauer(n, p, x, zeta, series_tol);
          gegen.value = g.value;
          gegen.reference = closed_value;
          gegen.error = std::abs(g.value - closed_value);
          gegen.bound = tol.value_or(1e-8);
          gegen.note = std::to_string(g.terms_used) + " terms";
        });
        table.add(std::move(gegen));
      }
      if (const auto j = zeta.sector(p); have_closed && j) {
        ResultRow boundary{{xl, zl, "poisson", "boundary-form", ""}};
        guarded(boundary, [&] {
          boundary.value = poisson_boundary_form(n, p, *j, x, zeta.coords());
          boundary.reference = closed_value;
          boundary.error = std::abs(*boundary.value - closed_value);
          boundary.bound = tol.value_or(1e-10) * std::max(1.0, std::abs(closed_value));
        });
        table.add(std::move(boundary));
      }

      ResultRow hua{{xl, zl, "cauchy-hua", "closed-form", ""}};
      guarded(hua, [&] {
        const ComplexVector z = x.embed(), w = zeta.embed();
        hua.value = cauchy_hua(n, z, w);
        if (!in_lie_domain(z, w)) {
          hua.status = RowStatus::kWarning;
          hua.note = "pair outside the Lie domain";
          warn("Cauchy-Hua kernel evaluated outside the Lie domain at x = " + xl + ", zeta = " + zl);
        }
      });
      table.add(std::move(hua));
    }
  }
  return table;
}

ResultTable cmd_dirichlet(const RunConfig& config, const WarningSink&) {
  const int n = config.integer("n");
  const int p = config.integer("p");
  NumericPoly q(n);
  try {
    q = parse_numeric_poly(config.text("boundary"), n);
  } catch (const ParseError& e) {
    throw ConfigError("boundary: " + parse_message(e));
  }
  const auto points = config.points("points");
  const bool oracle = is_polyharmonic(q, p);
  const auto tol = config.tolerance();

  std::vector<RotatedVector> interior;
  std::vector<std::string> rejection(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    try {
      require_interior(points[k], p);
      interior.push_back(points[k]);
    } catch (const DomainError& e) {
      rejection[k] = e.what();
    }
  }

  ResultTable table({"x", "sector"});
  DirichletOptions options;
  options.resolution = config.resolution();
  options.kernel_tolerance = config.number("kernel_tolerance");
  options.seed = config.seed();
  std::optional<DirichletSolution> solution;
  if (!interior.empty()) {
    solution = dirichlet_solve(BoundaryData::from_polynomial(q, p), interior, options);
    table.metadata()["rule"] = rule_to_json(solution->rule);
    table.metadata()["auto_resolution"] = solution->auto_resolution;
    if (solution->doubling_change) table.metadata()["doubling_change"] = *solution->doubling_change;
  }
  std::size_t next = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto sector = points[k].sector(p);
    ResultRow row{{point_label(points[k]), sector ? std::to_string(*sector) : ""}};
    if (!rejection[k].empty()) {
      row.status = RowStatus::kRejected;
      row.note = rejection[k];
    } else {
      row.value = solution->values[next++];
      if (oracle) {
        row.reference = evaluate(q, points[k]);
        row.error = std::abs(*row.value - *row.reference);
        row.bound = tol.value_or(1e-9);
      }
    }
    table.add(std::move(row));
  }
  return table;
}

ResultTable cmd_verify(const RunConfig& config, const WarningSink&) {
  std::vector<std::string> names = config.has("suites") ? config.texts("suites") : suite_names();
  for (const auto& name : names) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw ConfigError("unknown suite '" + name + "'");
    }
  }
  SuiteConfig suite_config;
  suite_config.dims = config.integers("dims");
  suite_config.orders = config.integers("orders");
  suite_config.seed = config.seed();
  suite_config.tolerance = config.tolerance();

  // Suites run concurrently; rows keep the requested suite order.
  struct Outcome {
    std::vector<SuiteRow> rows;
    std::string error;
  };
  auto run = [&](const std::string& name) {
    Outcome out;
    try {
      out.rows = run_suite(name, suite_config);
    } catch (const DomainError& e) {
      out.error = e.what();
    }
    return out;
  };
  std::vector<Outcome> outcomes(names.size());
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1) {
    for (std::size_t i = 0; i < names.size(); ++i) outcomes[i] = run(names[i]);
  } else {
    std::vector<std::future<Outcome>> futures;
    for (const auto& name : names) futures.push_back(std::async(std::launch::async, run, name));
    for (std::size_t i = 0; i < names.size(); ++i) outcomes[i] = futures[i].get();
  }

  ResultTable table({"suite", "property", "label", "statistical"});
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      ResultRow row{{names[i], "", "", ""}};
      row.status = RowStatus::kRejected;
      row.note = outcomes[i].error;
      table.add(std::move(row));
      continue;
    }
    for (const auto& r : outcomes[i].rows) {
      ResultRow row{{r.suite, r.property, r.label, r.statistical ? "yes" : "no"}};
      row.error = r.deviation;
      row.bound = r.tolerance;
      table.add(std::move(row));
    }
  }
  return table;
}

ResultTable cmd_hua_limit(const RunConfig& config, const WarningSink&) {
  const int n = config.integer("n");
  NumericPoly u(n);
  try {
    u = parse_numeric_poly(config.text("u"), n);
  } catch (const ParseError& e) {
    throw ConfigError("u: " + parse_message(e));
  }
  const ComplexVector z = config.complex_point("z");
  const auto p_list = config.integers("p_list");
  const double kernel_tol = config.number("kernel_tolerance");
  const int degree = u.is_zero() ? 0 : u.degree();
  if (!(lie_norm(z) < 1.0)) throw ConfigError("z must lie in the Lie ball");

  const SphereRule rule = config.resolution() ? sphere_rule(n, *config.resolution(), config.seed())
                                              : auto_limit_rule(n, degree, z, kernel_tol, config.seed());
  const LieSphereRule lie = auto_lie_rule(n, degree, lie_norm(z), kernel_tol);
  const LimitExperiment experiment = polyharmonic_limit_experiment(u, z, p_list, rule, lie);

  ResultTable table({"z", "p"});
  table.metadata()["rule"] = rule_to_json(rule);
  table.metadata()["lie_rule"] = {{"base", rule_to_json(lie.base)}, {"angular_count", lie.angular_count}};
  double previous = std::numeric_limits<double>::infinity();
  const std::string zl = complex_text(z);
  for (const auto& r : experiment.rows) {
    ResultRow row{{zl, std::to_string(r.p)}};
    row.value = r.value;
    row.reference = experiment.exact;
    row.error = r.error;
    row.bound = previous + 1e-12;
    row.note = "bound: previous error (non-increasing)";
    previous = r.error;
    table.add(std::move(row));
  }
  ResultRow hua{{zl, "cauchy-hua"}};
  hua.value = experiment.hua_value;
  hua.reference = experiment.exact;
  hua.error = std::abs(experiment.hua_value - experiment.exact);
  hua.bound = config.tolerance().value_or(1e-6);
  table.add(std::move(hua));
  return table;
}

ResultTable cmd_almansi(const RunConfig& config, const WarningSink&) {
  const int n = config.integer("n");
  const int p = config.integer("p");
  ExactPoly q(n);
  try {
    q = parse_exact_poly(config.text("polynomial"), n);
  } catch (const ParseError& e) {
    throw ConfigError("polynomial: " + parse_message(e));
  }
  if (!q.is_homogeneous()) throw ConfigError("polynomial must be homogeneous");
  const AlmansiDecomposition d = polyharmonic_almansi(q, p);

  ResultTable table({"kind", "k", "degree", "polynomial"});
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const int degree = d.degree - 2 * p * static_cast<int>(k);
    table.add({{"component", std::to_string(k), std::to_string(degree), format_poly(d.components[k])}});
    ResultRow check{{"annihilated", std::to_string(k), std::to_string(degree), ""}};
    check.error = iterated_laplacian(d.components[k], p).is_zero() ? 0.0 : 1.0;
    check.bound = 0.0;
    check.note = "Delta^p of the component is exactly zero";
    table.add(std::move(check));
  }
  ResultRow reassembly{{"reassembly", "", std::to_string(d.degree), format_poly(d.reassemble())}};
  reassembly.error = d.reassemble() == q ? 0.0 : 1.0;
  reassembly.bound = 0.0;
  reassembly.note = "sum of |x|^{2kp} times components equals the input exactly";
  table.add(std::move(reassembly));
  return table;
}

ResultTable cmd_dims(const RunConfig& config, const WarningSink&) {
  ResultTable table({"n", "p", "m", "dim_P", "dim_H", "dim_Hp"});
  const int max_degree = config.integer("max_degree");
  for (int n : config.integers("dims")) {
    for (int p : config.integers("orders")) {
      for (int m = 0; m <= max_degree; ++m) {
        table.add({{std::to_string(n), std::to_string(p), std::to_string(m), std::to_string(dim_P(n, m)),
                    std::to_string(dim_H(n, m)), std::to_string(dim_Hp(n, m, p))}});
      }
    }
  }
  return table;
}

ResultTable run_command(const RunConfig& config, const WarningSink& warn) {
  using Command = ResultTable (*)(const RunConfig&, const WarningSink&);
  static const std::map<std::string, Command> commands{
      {"kernel", cmd_kernel},       {"dirichlet", cmd_dirichlet}, {"verify", cmd_verify},
      {"hua-limit", cmd_hua_limit}, {"almansi", cmd_almansi},     {"dims", cmd_dims},
  };
  const auto it = commands.find(config.command());
  if (it == commands.end()) throw ConfigError("unknown command '" + config.command() + "'");
  ResultTable table = it->second(config, warn);
  json& meta = table.metadata();
  meta["command"] = config.command();
  meta["config"] = config.effective();
  meta["config_hash"] = hex_hash(config.hash());
  meta["versions"] = {{"polyharm", POLYHARM_VERSION},
                      {"gmp", gmp_version},
                      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  return table;
}

}  // namespace polyharm::cli
