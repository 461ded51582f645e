#pragma once

// Sparse multivariate polynomials over an exact (mpq) or numeric (complex
// double) coefficient field. Terms are kept in a map ordered by graded
// lexicographic order on exponent vectors; zero coefficients are never stored.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polyharm/error.hpp"

namespace polyharm {

using Rational = mpq_class;
using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace detail {

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const std::complex<double>& c) { return c == std::complex<double>{}; }

// mpq equality assumes canonical form; caller-built fractions may not be.
inline void canonicalize(Rational& c) { c.canonicalize(); }
inline void canonicalize(std::complex<double>&) {}

}  // namespace detail

template <class Coeff>
class MultiPoly {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<Exponent, Coeff, GrlexLess>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DomainError("polynomial needs at least one variable");
  }

  static MultiPoly constant(int nvars, const Coeff& c) {
    MultiPoly q(nvars);
    q.add_term(Exponent(nvars, 0), c);
    return q;
  }
  static MultiPoly monomial(Exponent e, const Coeff& c = Coeff(1)) {
    MultiPoly q(static_cast<int>(e.size()));
    q.add_term(std::move(e), c);
    return q;
  }
  /// The coordinate function x_{index+1}.
  static MultiPoly variable(int nvars, int index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e));
  }
  /// |x|^2 = x_1^2 + ... + x_n^2
  static MultiPoly norm_squared(int nvars) {
    MultiPoly q(nvars);
    for (int j = 0; j < nvars; ++j) {
      Exponent e(nvars, 0);
      e[j] = 2;
      q.add_term(std::move(e), Coeff(1));
    }
    return q;
  }

  int nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponent e, const Coeff& c) {
    if (static_cast<int>(e.size()) != nvars_) {
      throw DimensionMismatch("exponent length " + std::to_string(e.size()) +
                              " does not match variable count " + std::to_string(nvars_));
    }
    for (int a : e) {
      if (a < 0) throw DomainError("negative exponent");
    }
    if (detail::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (inserted) {
      detail::canonicalize(it->second);
    } else {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly homogeneous_part(int m) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) == m) out.terms_.emplace(e, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> MultiPoly<decltype(f(std::declval<const Coeff&>()))> {
    MultiPoly<decltype(f(std::declval<const Coeff&>()))> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Coeff& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Coeff& s) { return a *= s; }
  friend MultiPoly operator*(const Coeff& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Coeff(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    MultiPoly out = constant(nvars_, Coeff(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// d/dx_{index+1}
  MultiPoly derivative(int index) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponent d = e;
      d[index] -= 1;
      out.add_term(std::move(d), c * Coeff(e[index]));
    }
    return out;
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) {
      throw DimensionMismatch("polynomials have different variable counts");
    }
  }

  int nvars_;
  TermMap terms_;
};

using ExactPoly = MultiPoly<Rational>;
using NumericPoly = MultiPoly<std::complex<double>>;

inline NumericPoly to_numeric(const ExactPoly& q) {
  return q.map_coefficients([](const Rational& c) { return std::complex<double>(c.get_d()); });
}

/// All exponent vectors of total degree m in n variables, in grlex order.
std::vector<Exponent> monomials_of_degree(int n, int m);

}  // namespace polyharm
