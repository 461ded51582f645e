#include "polyharm/polyalg.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "polyharm/detail/elimination.hpp"
#include "polyharm/detail/numeric.hpp"
#include "polyharm/error.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

namespace {

void require_n(int n) {
  if (n < 2) throw DomainError("dimension n must be at least 2, got " + std::to_string(n));
}

void require_m(int m) {
  if (m < 0) throw DomainError("degree m must be nonnegative, got " + std::to_string(m));
}

void require_p(int p) {
  if (p < 1) throw DomainError("order p must be positive, got " + std::to_string(p));
}

void append_monomials(int n, int remaining, int index, Exponent& e, std::vector<Exponent>& out) {
  if (index == n - 1) {
    e[index] = remaining;
    out.push_back(e);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    e[index] = a;
    append_monomials(n, remaining - a, index + 1, e, out);
  }
}

/// Matrix of a linear map P_{from} -> P_{to} in the grlex monomial bases.
template <class Map>
detail::RationalMatrix operator_matrix(int n, int from, int to, Map&& map) {
  const auto cols = monomials_of_degree(n, from);
  const auto rows = monomials_of_degree(n, to);
  std::map<Exponent, std::size_t, GrlexLess> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  detail::RationalMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const ExactPoly image = map(ExactPoly::monomial(cols[j]));
    for (const auto& [e, c] : image.terms()) a.at(row_index.at(e))[j] = c;
  }
  return a;
}

ExactPoly from_coordinates(int n, const std::vector<Exponent>& basis,
                           const std::vector<Rational>& coords) {
  ExactPoly q(n);
  for (std::size_t i = 0; i < basis.size(); ++i) q.add_term(basis[i], coords[i]);
  return q;
}

std::vector<Rational> to_coordinates(const ExactPoly& q, const std::vector<Exponent>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  for (const auto& e : basis) v.push_back(q.coefficient(e));
  return v;
}

int homogeneous_degree(const ExactPoly& q) {
  if (!q.is_homogeneous()) throw DomainError("Almansi decomposition needs a homogeneous polynomial");
  return q.degree();
}

template <class Coeff>
Complex evaluate_complex(const MultiPoly<Coeff>& q, const ComplexVector& z, auto&& to_complex) {
  if (static_cast<std::size_t>(q.nvars()) != z.size()) {
    throw DimensionMismatch("polynomial has " + std::to_string(q.nvars()) +
                            " variables but point has dimension " + std::to_string(z.size()));
  }
  Complex sum{};
  for (const auto& [e, c] : q.terms()) {
    Complex term = to_complex(c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) term *= detail::ipow(z[j], e[j]);
    }
    sum += term;
  }
  return sum;
}

template <class Coeff>
Complex evaluate_rotated(const MultiPoly<Coeff>& q, double angle, std::span<const double> a,
                         auto&& to_complex) {
  if (static_cast<std::size_t>(q.nvars()) != a.size()) {
    throw DimensionMismatch("polynomial has " + std::to_string(q.nvars()) +
                            " variables but point has dimension " + std::to_string(a.size()));
  }
  // terms are grouped by degree in grlex order, so one pass accumulates each
  // homogeneous part at the real point and applies its phase e^{i d phi}
  Complex total{};
  Complex part{};
  int current = -1;
  auto flush = [&] {
    if (current >= 0) total += part * std::polar(1.0, current * angle);
  };
  for (const auto& [e, c] : q.terms()) {
    const int d = total_degree(e);
    if (d != current) {
      flush();
      current = d;
      part = 0.0;
    }
    double mono = 1.0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) mono *= detail::ipow(a[j], e[j]);
    }
    part += to_complex(c) * mono;
  }
  flush();
  return total;
}

const auto kExactToComplex = [](const Rational& c) { return Complex(c.get_d()); };
const auto kIdentity = [](const Complex& c) { return c; };

}  // namespace

std::vector<Exponent> monomials_of_degree(int n, int m) {
  if (n < 1) throw DomainError("need at least one variable");
  std::vector<Exponent> out;
  if (m < 0) return out;
  Exponent e(n, 0);
  append_monomials(n, m, 0, e, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

bool is_polyharmonic(const ExactPoly& q, int p) {
  require_p(p);
  return iterated_laplacian(q, p).is_zero();
}

bool is_polyharmonic(const NumericPoly& q, int p) {
  require_p(p);
  double scale = 0.0;
  for (const auto& [e, c] : q.terms()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  const NumericPoly r = iterated_laplacian(q, p);
  for (const auto& [e, c] : r.terms()) {
    if (std::abs(c) > 1e-9 * scale) return false;
  }
  return true;
}

std::uint64_t dim_P(int n, int m) {
  require_n(n);
  require_m(m);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n) + m - 1, static_cast<unsigned long>(n - 1));
  if (sizeof(unsigned long) < sizeof(std::uint64_t) || !c.fits_ulong_p()) {
    throw std::overflow_error("dim P_m overflows 64 bits for n=" + std::to_string(n) +
                              ", m=" + std::to_string(m));
  }
  return c.get_ui();
}

std::uint64_t dim_H(int n, int m) { return dim_Hp(n, m, 1); }

std::uint64_t dim_Hp(int n, int m, int p) {
  require_n(n);
  require_m(m);
  require_p(p);
  if (m < 2 * p) return dim_P(n, m);
  return dim_P(n, m) - dim_P(n, m - 2 * p);
}

ExactPoly AlmansiDecomposition::component(std::size_t k) const {
  if (k < components.size()) return components[k];
  return ExactPoly(nvars);
}

ExactPoly AlmansiDecomposition::reassemble() const {
  const ExactPoly radial = ExactPoly::norm_squared(nvars).pow(order);
  ExactPoly sum(nvars);
  ExactPoly factor = ExactPoly::constant(nvars, Rational(1));
  for (const auto& c : components) {
    sum += factor * c;
    factor = factor * radial;
  }
  return sum;
}

AlmansiDecomposition harmonic_almansi(const ExactPoly& q) {
  const int n = q.nvars();
  AlmansiDecomposition out;
  out.order = 1;
  out.nvars = n;
  out.degree = homogeneous_degree(q);
  if (q.is_zero()) {
    out.degree = 0;
    return out;
  }
  const ExactPoly r2 = ExactPoly::norm_squared(n);
  ExactPoly current = q;
  int d = out.degree;
  while (!current.is_zero()) {
    const ExactPoly lap = laplacian(current);
    if (d < 2 || lap.is_zero()) {
      out.components.push_back(current);
      break;
    }
    // Laplacian(|x|^2 r) = Laplacian(q) determines r in P_{d-2} uniquely
    const auto basis = monomials_of_degree(n, d - 2);
    auto a = operator_matrix(n, d - 2, d - 2,
                             [&](const ExactPoly& mono) { return laplacian(r2 * mono); });
    const auto r = from_coordinates(n, basis, detail::solve(std::move(a), to_coordinates(lap, basis)));
    out.components.push_back(current - r2 * r);
    current = r;
    d -= 2;
  }
  while (!out.components.empty() && out.components.back().is_zero()) out.components.pop_back();
  return out;
}

AlmansiDecomposition polyharmonic_almansi(const ExactPoly& q, int p) {
  require_p(p);
  const AlmansiDecomposition harmonic = harmonic_almansi(q);
  const int n = q.nvars();
  AlmansiDecomposition out;
  out.order = p;
  out.nvars = n;
  out.degree = harmonic.degree;
  const ExactPoly r2 = ExactPoly::norm_squared(n);
  const std::size_t groups = (harmonic.components.size() + p - 1) / static_cast<std::size_t>(p);
  for (std::size_t k = 0; k < groups; ++k) {
    ExactPoly block(n);
    ExactPoly factor = ExactPoly::constant(n, Rational(1));
    for (int j = 0; j < p; ++j) {
      block += factor * harmonic.component(k * p + j);
      factor = factor * r2;
    }
    out.components.push_back(std::move(block));
  }
  while (!out.components.empty() && out.components.back().is_zero()) out.components.pop_back();
  return out;
}

std::pair<ExactPoly, ExactPoly> polyharmonic_split(const ExactPoly& q, int p) {
  require_p(p);
  const int m = homogeneous_degree(q);
  if (m < 2 * p) throw DomainError("direct-sum split needs degree >= 2p");
  const auto dec = polyharmonic_almansi(q, p);
  const int n = q.nvars();
  const ExactPoly radial = ExactPoly::norm_squared(n).pow(p);
  ExactPoly rest(n);
  ExactPoly factor = ExactPoly::constant(n, Rational(1));
  for (std::size_t k = 1; k < dec.components.size(); ++k) {
    rest += factor * dec.components[k];
    factor = factor * radial;
  }
  return {dec.component(0), rest};
}

std::vector<ExactPoly> harmonic_basis(int n, int m) {
  require_n(n);
  require_m(m);
  const auto monos = monomials_of_degree(n, m);
  std::vector<ExactPoly> out;
  if (m < 2) {
    for (const auto& e : monos) out.push_back(ExactPoly::monomial(e));
    return out;
  }
  auto a = operator_matrix(n, m, m - 2, [](const ExactPoly& mono) { return laplacian(mono); });
  for (const auto& v : detail::nullspace(std::move(a), monos.size())) {
    out.push_back(from_coordinates(n, monos, v));
  }
  return out;
}

std::vector<ExactPoly> polyharmonic_basis(int n, int m, int p) {
  require_p(p);
  const ExactPoly r2 = ExactPoly::norm_squared(n);
  std::vector<ExactPoly> out;
  ExactPoly factor = ExactPoly::constant(n, Rational(1));
  for (int k = 0; k < p && m - 2 * k >= 0; ++k) {
    for (const auto& h : harmonic_basis(n, m - 2 * k)) out.push_back(factor * h);
    factor = factor * r2;
  }
  return out;
}

std::vector<NumericPoly> orthonormal_harmonic_basis(int n, int m) {
  if (n != 2 && n != 3) {
    throw DomainError("orthonormal harmonic bases are available for n in {2, 3} only");
  }
  const SphereRule rule = sphere_rule_for_degree(n, 2 * m);
  auto values = [&](const NumericPoly& q) {
    std::vector<Complex> v(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) v[i] = evaluate(q, rule.node(i));
    return v;
  };
  auto inner = [&](const std::vector<Complex>& f, const std::vector<Complex>& g) {
    CompensatedSum sum;
    for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weight(i) * f[i] * std::conj(g[i]);
    return sum.value();
  };
  std::vector<NumericPoly> out;
  std::vector<std::vector<Complex>> out_values;
  for (const auto& h : harmonic_basis(n, m)) {
    NumericPoly v = to_numeric(h);
    auto vv = values(v);
    for (std::size_t j = 0; j < out.size(); ++j) {
      const Complex c = inner(vv, out_values[j]);
      v -= out[j] * c;
      for (std::size_t i = 0; i < vv.size(); ++i) vv[i] -= c * out_values[j][i];
    }
    const double norm = std::sqrt(std::real(inner(vv, vv)));
    v *= Complex(1.0 / norm);
    for (auto& x : vv) x /= norm;
    out.push_back(std::move(v));
    out_values.push_back(std::move(vv));
  }
  return out;
}

Complex evaluate(const NumericPoly& q, const ComplexVector& z) {
  return evaluate_complex(q, z, kIdentity);
}

Complex evaluate(const ExactPoly& q, const ComplexVector& z) {
  return evaluate_complex(q, z, kExactToComplex);
}

Complex evaluate(const NumericPoly& q, const RotatedVector& z) {
  return evaluate_rotated(q, z.angle(), z.coords(), kIdentity);
}

Complex evaluate(const ExactPoly& q, const RotatedVector& z) {
  return evaluate_rotated(q, z.angle(), z.coords(), kExactToComplex);
}

Complex evaluate(const NumericPoly& q, double angle, std::span<const double> a) {
  return evaluate_rotated(q, angle, a, kIdentity);
}

Complex evaluate(const NumericPoly& q, std::span<const double> a) {
  if (static_cast<std::size_t>(q.nvars()) != a.size()) {
    throw DimensionMismatch("polynomial and point dimensions differ");
  }
  Complex sum{};
  for (const auto& [e, c] : q.terms()) {
    double mono = 1.0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) mono *= detail::ipow(a[j], e[j]);
    }
    sum += c * mono;
  }
  return sum;
}

}  // namespace polyharm
