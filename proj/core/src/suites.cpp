#include "polyharm/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "polyharm/boundary.hpp"
#include "polyharm/detail/elimination.hpp"
#include "polyharm/error.hpp"
#include "polyharm/gegenbauer.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/polyalg.hpp"
#include "polyharm/solver.hpp"

namespace polyharm {

namespace {

using Rng = std::mt19937_64;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Worst deviation seen; NaN counts as a failure.
struct Worst {
  double value = 0.0;
  void add(double d) { value = std::isnan(d) ? kInf : std::max(value, d); }
};

class Report {
 public:
  Report(std::string suite, const SuiteConfig& config) : suite_(std::move(suite)), config_(config) {}

  void add(const std::string& property, const std::string& label, double deviation, double tolerance,
           bool statistical = false) {
    rows_.push_back({suite_, property, label, deviation, config_.tolerance.value_or(tolerance), statistical});
  }
  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  std::string suite_;
  const SuiteConfig& config_;
  std::vector<SuiteRow> rows_;
};

std::string np_label(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

Rng make_rng(const SuiteConfig& config, std::uint64_t salt) { return Rng(config.seed * 0x9e3779b97f4a7c15ULL + salt); }

RealVector random_direction(Rng& rng, int n) {
  std::normal_distribution<double> normal;
  RealVector v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& c : v) {
      c = normal(rng);
      norm2 += c * c;
    }
  } while (norm2 < 1e-20);
  for (auto& c : v) c /= std::sqrt(norm2);
  return v;
}

RealVector scaled(RealVector v, double r) {
  for (auto& c : v) c *= r;
  return v;
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RotatedVector random_sphere_point(Rng& rng, int n, int p) {
  return RotatedVector::sector_point(uniform_int(rng, 0, p - 1), p, random_direction(rng, n));
}

RotatedVector random_ball_point(Rng& rng, int n, int p, double rmin, double rmax) {
  return RotatedVector::sector_point(uniform_int(rng, 0, p - 1), p,
                                     scaled(random_direction(rng, n), uniform(rng, rmin, rmax)));
}

ComplexVector random_complex(Rng& rng, int n, double norm) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(n);
  double norm2 = 0.0;
  for (auto& c : v) {
    c = {normal(rng), normal(rng)};
    norm2 += std::norm(c);
  }
  for (auto& c : v) c *= norm / std::sqrt(norm2);
  return ComplexVector(std::move(v));
}

void require_low_dims(const SuiteConfig& config, const char* suite) {
  for (int n : config.dims) {
    if (n != 2 && n != 3) throw DomainError(std::string(suite) + " supports n in {2, 3} only");
  }
}

void require_dims(const SuiteConfig& config) {
  if (config.dims.empty() || config.orders.empty()) throw DomainError("suite needs dims and orders");
  for (int n : config.dims) {
    if (n < 2) throw DomainError("dimension n must be at least 2");
  }
  for (int p : config.orders) {
    if (p < 1) throw DomainError("order p must be positive");
  }
}

// 1. the three routes for Z^p_m agree
std::vector<SuiteRow> route_agreement(const SuiteConfig& config) {
  Report report("route-agreement", config);
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 100 * n + p);
      Worst worst;
      for (int pair = 0; pair < 100; ++pair) {
        const RotatedVector zeta = random_sphere_point(rng, n, p);
        const double r = uniform(rng, 0.0, 0.9);
        const RotatedVector xr = random_ball_point(rng, n, p, r, r);
        const ComplexVector xc = random_complex(rng, n, r);
        for (int m = 0; m <= 8; ++m) {
          Complex rot[3], gen[3];
          for (int k = 0; k < 3; ++k) {
            rot[k] = zonal_polyharmonic({n, p, m}, xr, zeta, kAllRoutes[k]);
            gen[k] = zonal_polyharmonic({n, p, m}, xc, zeta, kAllRoutes[k]);
          }
          for (const auto* v : {rot, gen}) {
            const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::pow(r, m)});
            worst.add(std::abs(v[0] - v[1]) / scale);
            worst.add(std::abs(v[0] - v[2]) / scale);
            worst.add(std::abs(v[1] - v[2]) / scale);
          }
        }
      }
      report.add("relative route gap, m<=8, 100 pairs", np_label(n, p), worst.value, 1e-10);
    }
  }
  return report.take();
}

bool near_branch_cut(Complex den) { return std::abs(den.imag()) < 1e-12 && den.real() <= 0.0; }

// 2. closed form against the truncated series
std::vector<SuiteRow> series_identity(const SuiteConfig& config) {
  Report report("series-identity", config);
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 200 * n + p);
      Worst series, gegenbauer, positivity;
      int max_terms = 0;
      for (int point = 0; point < 100;) {
        const RotatedVector x = random_ball_point(rng, n, p, 0.0, 0.8);
        const RotatedVector zeta = random_sphere_point(rng, n, p);
        const ComplexVector xe = x.embed();
        const ComplexVector ze = zeta.embed();
        const Complex den = bilinear_square(xe) * std::conj(bilinear_square(ze)) - 2.0 * hermitian_dot(xe, ze) + 1.0;
        if (n % 2 == 1 && near_branch_cut(den)) continue;
        ++point;
        const Complex closed = poisson_kernel(n, p, x, zeta);
        const KernelValue s = poisson_kernel_series(n, p, x, zeta, 1e-8);
        const KernelValue g = poisson_kernel_gegenbauer(n, p, x, zeta, 1e-8);
        max_terms = std::max(max_terms, s.terms_used);
        series.add(s.terms_used <= 200 ? std::abs(s.value - closed) : kInf);
        gegenbauer.add(std::abs(g.value - closed));
        // same sector: the kernel is real and positive
        const RotatedVector same = RotatedVector(x.angle(), random_direction(rng, n));
        const Complex pk = poisson_kernel(n, p, x, same);
        positivity.add(pk.real() > 0.0 ? std::abs(pk.imag()) / pk.real() : kInf);
      }
      report.add("|closed - series|, |x|<=0.8, M<=200 (max M " + std::to_string(max_terms - 1) + ")",
                 np_label(n, p), series.value, 1e-8);
      report.add("|closed - Gegenbauer series|", np_label(n, p), gegenbauer.value, 1e-8);
      report.add("same-sector kernel real positive (|Im|/Re)", np_label(n, p), positivity.value, 1e-12);
    }
  }
  return report.take();
}

// 3. Z^p_m(eta, eta) = dim H^p_m
std::vector<SuiteRow> diagonal_dim(const SuiteConfig& config) {
  Report report("diagonal-dim", config);
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 300 * n + p);
      Worst worst;
      for (int j = 0; j < p; ++j) {
        for (int sample = 0; sample < 5; ++sample) {
          const RotatedVector eta = RotatedVector::sector_point(j, p, random_direction(rng, n));
          for (int m = 0; m <= 8; ++m) {
            const double dim = static_cast<double>(dim_Hp(n, m, p));
            for (ZonalRoute route : kAllRoutes) {
              worst.add(std::abs(zonal_polyharmonic({n, p, m}, eta, eta, route) - dim));
            }
          }
        }
      }
      report.add("|Z(eta,eta) - dim H^p_m|, m<=8, every sector", np_label(n, p), worst.value, 1e-9);
    }
  }
  return report.take();
}

// Hermitian symmetry, scaling rule, diagonal bound, p = 1 reduction
std::vector<SuiteRow> zonal_properties(const SuiteConfig& config) {
  Report report("zonal-properties", config);
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 350 * n + p);
      Worst symmetry, scaling, bound, reduction;
      for (int pair = 0; pair < 50; ++pair) {
        const RotatedVector zeta = random_sphere_point(rng, n, p);
        const RotatedVector eta = random_sphere_point(rng, n, p);
        const Complex a = std::polar(uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 2.0 * kPi));
        const RotatedVector x = random_ball_point(rng, n, p, 0.0, 1.0);
        for (int m = 0; m <= 8; ++m) {
          const KernelParams params{n, p, m};
          const ZonalRoute route = ZonalRoute::kGegenbauerDiff;
          const Complex z_ze = zonal_polyharmonic(params, zeta, eta, route);
          const Complex z_ez = zonal_polyharmonic(params, eta, zeta, route);
          symmetry.add(std::abs(std::conj(z_ze) - z_ez));
          const double dim = static_cast<double>(dim_Hp(n, m, p));
          bound.add(std::max(0.0, std::abs(z_ze) / dim - 1.0));
          const Complex left = zonal_polyharmonic_ext(params, zeta.embed().scaled(a), eta.embed(), route);
          const Complex right = zonal_polyharmonic_ext(params, zeta.embed(), eta.embed().scaled(std::conj(a)), route);
          scaling.add(std::abs(left - right) / std::max(1.0, std::abs(left)));
          if (p == 1) {
            reduction.add(std::abs(zonal_polyharmonic(params, x, zeta, ZonalRoute::kSumOfZonals) -
                                   zonal_harmonic(n, m, x, zeta)));
          }
        }
      }
      report.add("|conj Z(zeta,eta) - Z(eta,zeta)|", np_label(n, p), symmetry.value, 1e-11);
      report.add("Z(a zeta, eta) = Z(zeta, conj(a) eta), |a|<=2 (relative)", np_label(n, p), scaling.value, 1e-11);
      report.add("|Z(zeta,eta)| / dim H^p_m - 1 (excess)", np_label(n, p), bound.value, 1e-9);
      if (p == 1) report.add("p=1 equals zonal harmonic", np_label(n, p), reduction.value, 1e-12);
    }
  }
  return report.take();
}

// rank of Delta^p : P_m -> P_{m-2p} over Q
std::size_t laplacian_rank(int n, int m, int p) {
  if (m < 2 * p) return 0;
  const auto from = monomials_of_degree(n, m);
  const auto to = monomials_of_degree(n, m - 2 * p);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < to.size(); ++i) row_of[to[i]] = i;
  detail::RationalMatrix a(to.size(), std::vector<Rational>(from.size(), Rational(0)));
  for (std::size_t c = 0; c < from.size(); ++c) {
    const ExactPoly image = iterated_laplacian(ExactPoly::monomial(from[c]), p);
    for (const auto& [e, coeff] : image.terms()) a[row_of.at(e)][c] = coeff;
  }
  return detail::rref(a, from.size()).size();
}

std::vector<SuiteRow> dimension_nullspace(const SuiteConfig& config) {
  Report report("dimension-nullspace", config);
  for (int n : config.dims) {
    for (int p : config.orders) {
      double mismatches = 0.0;
      for (int m = 0; m <= 8; ++m) {
        const auto nullity = dim_P(n, m) - laplacian_rank(n, m, p);
        if (nullity != dim_Hp(n, m, p)) mismatches += 1.0;
        if (polyharmonic_basis(n, m, p).size() != dim_Hp(n, m, p)) mismatches += 1.0;
      }
      report.add("dim H^p_m = nullity of Delta^p on P_m, m<=8 (mismatches)", np_label(n, p), mismatches, 0.0);
    }
  }
  return report.take();
}

std::vector<RotatedVector> interior_points(Rng& rng, int n, int p, int per_sector, double rmax) {
  std::vector<RotatedVector> points;
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < per_sector; ++k) {
      points.push_back(RotatedVector::sector_point(j, p, scaled(random_direction(rng, n), uniform(rng, 0.05, rmax))));
    }
  }
  return points;
}

// 4. Poisson integral reproduces H^p_m, and the two kernel displays agree
std::vector<SuiteRow> reproduction(const SuiteConfig& config) {
  require_low_dims(config, "reproduction");
  Report report("reproduction", config);
  constexpr double kRadius = 0.6;
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 400 * n + p);
      const auto points = interior_points(rng, n, p, 20, kRadius);
      const SphereRule rule = auto_rule(n, p, 6, kRadius, 1e-13);
      const PoissonIntegrator closed(n, p, points, rule, KernelForm::kClosedForm);
      const PoissonIntegrator boundary(n, p, points, rule, KernelForm::kBoundaryForm);
      Worst reproduce, forms;
      std::size_t elements = 0;
      for (int m = 0; m <= 6; ++m) {
        for (const auto& q : polyharmonic_basis(n, m, p)) {
          ++elements;
          const NumericPoly qn = to_numeric(q);
          const BoundaryData f = BoundaryData::from_polynomial(qn, p);
          const auto a = closed.apply(f);
          const auto b = boundary.apply(f);
          for (std::size_t k = 0; k < points.size(); ++k) {
            reproduce.add(std::abs(a[k] - evaluate(qn, points[k])));
            forms.add(std::abs(a[k] - b[k]));
          }
        }
      }
      const std::string label = np_label(n, p) + " (" + std::to_string(elements) + " basis elements, exactness " +
                                std::to_string(rule.exactness_degree()) + ")";
      report.add("|P_p[q](x) - q(x)|, q in H^p_m, m<=6", label, reproduce.value, 1e-9);
      report.add("|closed-form - boundary-form integral|", label, forms.value, 1e-11);
    }
  }
  return report.take();
}

// 5. cross-degree orthogonality on the rotated sphere
std::vector<SuiteRow> orthogonality(const SuiteConfig& config) {
  Report report("orthogonality", config);
  for (int n : config.dims) {
    const SphereRule rule = sphere_rule_for_degree(n, 12, config.seed);
    const std::size_t nodes = rule.size();
    for (int p : config.orders) {
      struct Element {
        int degree;
        std::vector<Complex> values;  // [sector][node]
        double norm;
      };
      std::vector<Element> elements;
      for (int m = 0; m <= 6; ++m) {
        for (const auto& q : polyharmonic_basis(n, m, p)) {
          const NumericPoly qn = to_numeric(q);
          Element e{m, std::vector<Complex>(p * nodes), 0.0};
          for (int j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < nodes; ++i) e.values[j * nodes + i] = evaluate(qn, kPi * j / p, rule.node(i));
          }
          elements.push_back(std::move(e));
        }
      }
      // <u, v> and, for Monte Carlo rules, a 5-sigma error estimate
      auto inner = [&](const Element& u, const Element& v, double* sigma) {
        CompensatedSum sum;
        double second = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) {
          Complex point{};
          for (int j = 0; j < p; ++j) point += u.values[j * nodes + i] * std::conj(v.values[j * nodes + i]);
          point /= double(p);
          sum += rule.weight(i) * point;
          second += rule.weight(i) * std::norm(point);
        }
        const Complex mean = sum.value();
        if (sigma) *sigma = 5.0 * std::sqrt(std::max(0.0, second - std::norm(mean)) / double(nodes));
        return mean;
      };
      for (auto& e : elements) e.norm = std::sqrt(std::real(inner(e, e, nullptr)));
      Worst cross, symmetric, positive, statistical_excess;
      for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
          const auto& u = elements[a];
          const auto& v = elements[b];
          const double scale = u.norm * v.norm;
          double sigma = 0.0;
          const Complex uv = inner(u, v, &sigma);
          if (u.degree != v.degree) {
            if (rule.monte_carlo()) {
              statistical_excess.add(std::abs(uv) / scale - sigma / scale);
            } else {
              cross.add(std::abs(uv) / scale);
            }
          }
          if (b > a) continue;
          symmetric.add(std::abs(uv - std::conj(inner(v, u, nullptr))) / scale);
          if (a == b) positive.add(std::abs(std::imag(uv)) / scale);
        }
      }
      if (rule.monte_carlo()) {
        report.add("normalized cross-degree |<u,v>| beyond 5 sigma", np_label(n, p), std::max(0.0, statistical_excess.value),
                   0.0, true);
      } else {
        report.add("normalized cross-degree |<u,v>|, degrees<=6", np_label(n, p), cross.value, 1e-10);
      }
      report.add("<f,g> = conj <g,f> (normalized)", np_label(n, p), symmetric.value, 1e-13);
      report.add("Im <f,f> (normalized)", np_label(n, p), positive.value, 1e-13);
    }
  }
  return report.take();
}

ExactPoly random_homogeneous(Rng& rng, int n, int m) {
  ExactPoly q(n);
  for (const auto& e : monomials_of_degree(n, m)) {
    if (uniform_int(rng, 0, 2) == 0) continue;
    q.add_term(e, Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5)));
  }
  if (q.is_zero()) q.add_term(monomials_of_degree(n, m).front(), Rational(1));
  return q;
}

// 6. exact Almansi decompositions
std::vector<SuiteRow> almansi(const SuiteConfig& config) {
  Report report("almansi", config);
  Rng rng = make_rng(config, 600);
  std::vector<int> dims;
  for (int n : config.dims) {
    if (n <= 3) dims.push_back(n);
  }
  if (dims.empty()) throw DomainError("almansi suite needs n in {2, 3}");
  double reassembly = 0, annihilation = 0, degrees = 0, split = 0, uniqueness = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const int n = dims[sample % dims.size()];
    const int m = uniform_int(rng, 0, 8);
    const int p = config.orders[uniform_int(rng, 0, static_cast<int>(config.orders.size()) - 1)];
    const ExactPoly q = random_homogeneous(rng, n, m);

    const auto harmonic = harmonic_almansi(q);
    const auto poly = polyharmonic_almansi(q, p);
    if (!(harmonic.reassemble() == q) || !(poly.reassemble() == q)) reassembly += 1;
    for (std::size_t k = 0; k < harmonic.components.size(); ++k) {
      const auto& u = harmonic.components[k];
      if (!laplacian(u).is_zero()) annihilation += 1;
      if (!u.is_zero() && (!u.is_homogeneous() || u.degree() != m - 2 * static_cast<int>(k))) degrees += 1;
    }
    for (std::size_t k = 0; k < poly.components.size(); ++k) {
      const auto& u = poly.components[k];
      if (!iterated_laplacian(u, p).is_zero()) annihilation += 1;
      if (!u.is_zero() && (!u.is_homogeneous() || u.degree() != m - 2 * p * static_cast<int>(k))) degrees += 1;
    }
    if (m >= 2 * p) {
      const auto [h, r] = polyharmonic_split(q, p);
      if (!iterated_laplacian(h, p).is_zero() || !(h + ExactPoly::norm_squared(n).pow(p) * r == q)) split += 1;
    }
    // perturbing one component by a nonzero harmonic of its degree changes the sum
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, m / 2));
    const auto basis = harmonic_basis(n, m - 2 * static_cast<int>(k));
    AlmansiDecomposition perturbed = harmonic;
    perturbed.components.resize(std::max(perturbed.components.size(), k + 1), ExactPoly(n));
    perturbed.components[k] += basis.front();
    if (perturbed.reassemble() == q) uniqueness += 1;
  }
  report.add("reassembly is exact (failures of 200)", "n<=3 m<=8", reassembly, 0.0);
  report.add("components annihilated by Delta^p (failures)", "n<=3 m<=8", annihilation, 0.0);
  report.add("component degrees m-2k / m-2kp (failures)", "n<=3 m<=8", degrees, 0.0);
  report.add("P_m = H^p_m + |x|^{2p} P_{m-2p} split (failures)", "n<=3 m<=8", split, 0.0);
  report.add("perturbed component never reassembles to q (failures)", "n<=3 m<=8", uniqueness, 0.0);
  return report.take();
}

// 7. sector integrals of the kernel; far-cap decay
std::vector<SuiteRow> sector_integrals(const SuiteConfig& config) {
  require_low_dims(config, "sector-integrals");
  Report report("sector-integrals", config);
  constexpr double kRadius = 0.7;
  for (int n : config.dims) {
    for (int p : config.orders) {
      Rng rng = make_rng(config, 700 * n + p);
      const SphereRule rule = auto_rule(n, p, 0, kRadius, 1e-13);
      Worst sector, average;
      for (int point = 0; point < 20; ++point) {
        const RealVector a = scaled(random_direction(rng, n), uniform(rng, 0.05, kRadius));
        double r2 = 0.0;
        for (double c : a) r2 += c * c;
        Complex mean{};
        for (int k = 0; k < p; ++k) {
          const RotatedVector x(-kPi * k / p, a);
          const Complex integral =
              sphere_integral([&](std::span<const double> zeta) {
                return poisson_kernel(n, p, x, RotatedVector::real(RealVector(zeta.begin(), zeta.end())));
              }, rule);
          Complex expected{};
          for (int j = 0; j < p; ++j) expected += std::polar(std::pow(r2, j), -2.0 * kPi * k * j / p);
          sector.add(std::abs(integral - expected));
          mean += integral / double(p);
        }
        average.add(std::abs(mean - 1.0));
      }
      report.add("int_S P_p(e^{-k pi i/p} x, .) = sum_j e^{-2kj pi i/p}|x|^{2j}", np_label(n, p), sector.value, 1e-10);
      report.add("(1/p) sum_k int_S P_p(e^{-k pi i/p} x, .) = 1", np_label(n, p), average.value, 1e-10);

      // far cap: sum_k int_{||zeta - e^{-k pi i/p} eta|| > delta} |P_p(e^{-k pi i/p} x, zeta)|
      const double delta = 0.5;
      const SphereRule fine = sphere_rule_for_degree(n, n == 2 ? 2000 : 300);
      const int j = uniform_int(rng, 0, p - 1);
      const RealVector b = random_direction(rng, n);
      auto far_cap = [&](double r) {
        double total = 0.0;
        for (int k = 0; k < p; ++k) {
          const double theta = kPi * (j - k) / p;  // e^{-k pi i/p} eta = e^{i theta} b
          const RotatedVector x(theta, scaled(b, r));
          total += sphere_integral([&](std::span<const double> zeta) {
                     double dot = 0.0;
                     for (int c = 0; c < n; ++c) dot += zeta[c] * b[c];
                     if (std::sqrt(std::max(0.0, 2.0 - 2.0 * std::cos(theta) * dot)) <= delta) return Complex{};
                     return Complex(std::abs(poisson_kernel(n, p, x, RotatedVector::real(RealVector(zeta.begin(), zeta.end())))));
                   }, fine).real();
        }
        return total;
      };
      Worst excess;
      const double near = far_cap(0.99);
      const double far = far_cap(0.9);
      for (const auto& [r, value] : {std::pair{0.9, far}, std::pair{0.99, near}}) {
        excess.add(std::max(0.0, value - p * (1.0 - std::pow(r, 2 * p)) / std::pow(delta, n)));
      }
      report.add("far-cap integral <= p(1-r^{2p})/delta^n at r=0.9, 0.99", np_label(n, p), excess.value, 1e-6);
      report.add("far-cap integral smaller at r=0.99 than r=0.9", np_label(n, p), std::max(0.0, near - far), 0.0);
    }
  }
  return report.take();
}

// 8. P_p -> H on compact subsets of the Lie domain
std::vector<SuiteRow> hua_convergence(const SuiteConfig& config) {
  Report report("hua-convergence", config);
  for (int n : config.dims) {
    Rng rng = make_rng(config, 800 + n);
    std::vector<std::pair<ComplexVector, ComplexVector>> sample;
    for (int k = 0; k < 20; ++k) {
      sample.emplace_back(random_complex(rng, n, uniform(rng, 0.2, 0.7)), random_complex(rng, n, uniform(rng, 0.2, 0.7)));
    }
    Worst symmetry, relation;
    for (const auto& [z, w] : sample) {
      const Complex h = cauchy_hua(n, z, w);
      symmetry.add(std::abs(h - std::conj(cauchy_hua(n, w, z))) / std::abs(h));
      for (int p : {1, 2, 4, 8}) {
        const Complex zw = bilinear_square(z) * std::conj(bilinear_square(w));
        Complex power = 1.0;
        for (int i = 0; i < p; ++i) power *= zw;
        relation.add(std::abs(poisson_kernel_extended(n, p, z, w) - (1.0 - power) * h) / std::abs(h));
      }
    }
    const std::string label = "n=" + std::to_string(n);
    report.add("H(z,w) = conj H(w,z) (relative)", label, symmetry.value, 1e-12);
    report.add("P_p(z,w) = (1 - (z^2 conj w^2)^p) H(z,w) (relative)", label, relation.value, 1e-12);
    double previous = kInf;
    double increases = 0.0;
    double alpha = 0.0;
    for (int p : {1, 2, 4, 8}) {
      const HuaGap g = hua_convergence_gap(n, sample, p);
      alpha = g.alpha;
      report.add("|P_p - H| - alpha^{2p} max|H| (excess)", label + " p=" + std::to_string(p),
                 std::max(0.0, g.gap - g.bound * (1.0 + 1e-9)), 0.0);
      if (!(g.gap < previous)) increases += 1.0;
      previous = g.gap;
    }
    report.add("gap decreases over p=1,2,4,8 (violations, alpha=" + std::to_string(alpha) + ")", label, increases, 0.0);
  }
  return report.take();
}

// 9. Lie-sphere reproduction of holomorphic monomials
std::vector<SuiteRow> hua_reproduction(const SuiteConfig& config) {
  require_low_dims(config, "hua-reproduction");
  Report report("hua-reproduction", config);
  constexpr double kLieRadius = 0.6;
  for (int n : config.dims) {
    Rng rng = make_rng(config, 900 + n);
    std::vector<NumericPoly> monomials;
    for (int d = 0; d <= 4; ++d) {
      for (const auto& e : monomials_of_degree(n, d)) monomials.push_back(NumericPoly::monomial(e));
    }
    const LieSphereRule rule = auto_lie_rule(n, 4, kLieRadius, 1e-10);
    const int degree = rule.base.exactness_degree();
    const LieSphereRule doubled = lie_sphere_rule(sphere_rule_for_degree(n, degree + 10), 2 * rule.angular_count);
    Worst reproduce, refine;
    for (int point = 0; point < 10; ++point) {
      ComplexVector z = random_complex(rng, n, 1.0);
      z = z.scaled(uniform(rng, 0.1, kLieRadius) / lie_norm(z));
      const auto values = hua_reproduce(monomials, z, rule);
      for (std::size_t k = 0; k < monomials.size(); ++k) reproduce.add(std::abs(values[k] - evaluate(monomials[k], z)));
      if (point < 2) {
        const auto finer = hua_reproduce(monomials, z, doubled);
        for (std::size_t k = 0; k < monomials.size(); ++k) refine.add(std::abs(finer[k] - values[k]));
      }
    }
    const std::string label = "n=" + std::to_string(n) + " (A=" + std::to_string(rule.angular_count) +
                              ", exactness " + std::to_string(degree) + ")";
    report.add("|int_LS H(z,.) u - u(z)|, monomials deg<=4, L(z)<=0.6", label, reproduce.value, 1e-6);
    report.add("change on doubling the Lie-sphere rule", label, refine.value, 1e-10);
  }
  return report.take();
}

// 10. u_p(z) -> u(z) for u = z1^2 at z = (0.4, 0.2)
std::vector<SuiteRow> limit_theorem(const SuiteConfig& config) {
  Report report("limit-theorem", config);
  const ComplexVector z = ComplexVector::from_real(std::vector<double>{0.4, 0.2});
  const std::vector<int> p_list{1, 2, 4, 8, 16, 64};
  const SphereRule rule = auto_limit_rule(2, 2, z, 1e-14, config.seed);
  const LieSphereRule lie = auto_lie_rule(2, 2, lie_norm(z), 1e-14);
  const NumericPoly u = NumericPoly::monomial({2, 0});
  const auto experiment = polyharmonic_limit_experiment(u, z, p_list, rule, lie);
  double increase = 0.0;
  for (std::size_t k = 1; k < experiment.rows.size(); ++k) {
    increase = std::max(increase, experiment.rows[k].error - experiment.rows[k - 1].error);
  }
  const std::string label = "u=z1^2 z=(0.4,0.2) n=2";
  report.add("error non-increasing over p=1,2,4,8,16,64 (largest increase)", label, std::max(0.0, increase), 1e-12);
  report.add("|u_64(z) - u(z)|", label, experiment.rows.back().error, 1e-3);
  report.add("|u_64(z) - Cauchy-Hua integral|", label, std::abs(experiment.rows.back().value - experiment.hua_value), 1e-4);
  report.add("|Cauchy-Hua integral - u(z)|", label, std::abs(experiment.hua_value - experiment.exact), 1e-8);
  const auto constant = polyharmonic_limit_experiment(NumericPoly::constant(2, 1.0), z, p_list, rule, lie);
  double worst = 0.0;
  for (const auto& row : constant.rows) worst = std::max(worst, row.error);
  report.add("u=1 gives u_p(z)=1 for every p", "z=(0.4,0.2) n=2", worst, 1e-12);
  return report.take();
}

// 11. recurrence against the exact explicit sum; generating function
std::vector<SuiteRow> gegenbauer_suite(const SuiteConfig& config) {
  Report report("gegenbauer", config);
  for (double lambda : {1.0, 1.5, 2.0, 2.5}) {
    Worst agreement, parity;
    for (int m = 0; m <= 30; ++m) {
      // sup of |C_m| on [-1, 1] is C_m(1) = (2 lambda)_m / m!
      double sup = 1.0;
      for (int i = 0; i < m; ++i) sup *= (2.0 * lambda + i) / (i + 1.0);
      for (int i = 0; i <= 100; ++i) {
        const double t = -1.0 + 0.02 * i;
        const double recurrence = gegenbauer(lambda, m, t);
        agreement.add(std::abs(recurrence - gegenbauer_explicit(lambda, m, t)) / sup);
        parity.add(std::abs(gegenbauer(lambda, m, -t) - (m % 2 == 0 ? recurrence : -recurrence)) / sup);
      }
    }
    char label[32];
    std::snprintf(label, sizeof label, "lambda=%g", lambda);
    report.add("recurrence vs explicit sum, m<=30, 101 t (relative to sup)", label, agreement.value, 1e-11);
    report.add("parity C_m(-t) = (-1)^m C_m(t) (relative to sup)", label, parity.value, 1e-12);

    // partial sums against the closed form, bounded by the majorant
    // sum_{m>M} C_m(1) |w|^m, which decays geometrically
    Worst excess, limit;
    for (double t : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
      for (Complex w : {Complex(0.5), std::polar(0.3, kPi / 3), Complex(0.0, 0.6)}) {
        const double rho = std::abs(w);
        const Complex closed = generating_function(lambda, t, w);
        for (int M = 0; M <= 120; ++M) {
          const double gap = std::abs(generating_partial_sum(lambda, t, w, M) - closed);
          double term = 1.0;
          double tail = 0.0;
          for (int m = 0; m <= M + 3000; ++m) {
            if (m > M) tail += term * std::pow(rho, m);
            term *= (2.0 * lambda + m) / (m + 1.0);
          }
          excess.add(std::max(0.0, gap - tail * (1.0 + 1e-9) - 1e-13));
          if (M == 120) limit.add(gap / std::abs(closed));
        }
      }
    }
    report.add("partial-sum gap above the geometric majorant", label, excess.value, 0.0);
    report.add("partial-sum gap at M=120 relative to the closed form, |w|<=0.6", label, limit.value, 1e-12);
  }
  return report.take();
}

using SuiteFunction = std::vector<SuiteRow> (*)(const SuiteConfig&);

const std::map<std::string, SuiteFunction>& registry() {
  static const std::map<std::string, SuiteFunction> table{
      {"route-agreement", route_agreement},   {"series-identity", series_identity},
      {"diagonal-dim", diagonal_dim},         {"zonal-properties", zonal_properties},
      {"dimension-nullspace", dimension_nullspace}, {"reproduction", reproduction},
      {"orthogonality", orthogonality},       {"almansi", almansi},
      {"sector-integrals", sector_integrals}, {"hua-convergence", hua_convergence},
      {"hua-reproduction", hua_reproduction}, {"limit-theorem", limit_theorem},
      {"gegenbauer", gegenbauer_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "route-agreement",  "series-identity", "diagonal-dim",     "zonal-properties", "dimension-nullspace",
      "reproduction",     "orthogonality",   "almansi",          "sector-integrals", "hua-convergence",
      "hua-reproduction", "limit-theorem",   "gegenbauer"};
  return names;
}

std::vector<SuiteRow> run_suite(const std::string& name, const SuiteConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite '" + name + "'");
  require_dims(config);
  return it->second(config);
}

}  // namespace polyharm
