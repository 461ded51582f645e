#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyharm/error.hpp"
#include "polyharm/polyalg.hpp"
#include "polyharm/polytext.hpp"

using namespace polyharm;

namespace {

ExactPoly parse(const char* text, int n = 2) { return parse_exact_poly(text, n); }

ExactPoly random_homogeneous(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), coin(0, 2);
  ExactPoly q(n);
  for (const auto& e : oracle::enumerate_monomials(n, m)) {
    if (coin(rng) == 0) continue;
    q.add_term(e, Rational(num(rng), den(rng)));
  }
  if (q.is_zero()) q.add_term(oracle::enumerate_monomials(n, m).front(), Rational(1));
  return q;
}

}  // namespace

TEST_CASE("laplacian examples") {
  CHECK(laplacian(parse("x1^2 + x2^2")) == ExactPoly::constant(2, Rational(4)));
  CHECK(laplacian(parse("x1^2 - x2^2")).is_zero());
  CHECK(laplacian(parse("(x1^2 + x2^2)^2")) == parse("16*x1^2 + 16*x2^2"));
}

TEST_CASE("polyharmonicity examples") {
  CHECK(is_polyharmonic(parse("x1^2 - x2^2"), 1));
  CHECK_FALSE(is_polyharmonic(parse("x1^2 + x2^2"), 1));
  CHECK(is_polyharmonic(parse("x1^2 + x2^2"), 2));
  CHECK(is_polyharmonic(parse("(x1^2 + x2^2)*(x1^2 - x2^2)"), 2));
  CHECK_FALSE(is_polyharmonic(parse("(x1^2 + x2^2)*(x1^2 - x2^2)"), 1));
}

TEST_CASE("dimension examples") {
  CHECK(dim_P(3, 0) == 1);
  CHECK(dim_P(3, 2) == 6);
  CHECK(dim_P(2, 5) == 6);
  CHECK(dim_H(3, 1) == 3);
  CHECK(dim_H(3, 2) == 5);
  CHECK(dim_H(2, 4) == 2);
  CHECK(dim_Hp(3, 3, 2) == 10);
  CHECK(dim_Hp(3, 4, 2) == 14);
  CHECK_THROWS_AS(dim_P(2, -1), DomainError);
}

TEST_CASE("dimensions against monomial enumeration and exact nullspaces") {
  for (int n : {2, 3, 4}) {
    for (int m = 0; m <= 8; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(dim_P(n, m) == oracle::count_monomials(n, m));
      CHECK(dim_H(n, m) == oracle::polyharmonic_nullity(n, m, 1));
      CHECK(dim_Hp(n, m, 1) == dim_H(n, m));
      if (n <= 3) {
        for (int p = 2; p <= 3; ++p) CHECK(dim_Hp(n, m, p) == oracle::polyharmonic_nullity(n, m, p));
      }
    }
  }
  CHECK_THROWS_AS(dim_P(1, 2), DomainError);
}

TEST_CASE("harmonic Almansi examples") {
  const auto radial = harmonic_almansi(parse("x1^2 + x2^2"));
  CHECK(radial.component(0).is_zero());
  CHECK(radial.component(1) == ExactPoly::constant(2, Rational(1)));

  const auto square = harmonic_almansi(parse("x1^2"));
  CHECK(square.component(0) == parse("1/2*x1^2 - 1/2*x2^2"));
  CHECK(square.component(1) == ExactPoly::constant(2, Rational(1, 2)));

  const ExactPoly harmonic = parse("x1^3 - 3*x1*x2^2");
  const auto h = harmonic_almansi(harmonic);
  CHECK(h.component(0) == harmonic);
  CHECK(h.component(1).is_zero());
}

TEST_CASE("polyharmonic Almansi examples") {
  const ExactPoly harmonic = parse("x1*x2");
  for (int p = 1; p <= 3; ++p) {
    const auto d = polyharmonic_almansi(harmonic, p);
    CHECK(d.component(0) == harmonic);
    CHECK(d.component(1).is_zero());
  }

  const auto quartic = polyharmonic_almansi(parse("(x1^2 + x2^2)^2"), 2);
  CHECK(quartic.component(0).is_zero());
  CHECK(quartic.component(1) == ExactPoly::constant(2, Rational(1)));

  // x1^4 = (u0 + |x|^2 u1) + |x|^4 * 3/8 with u0, u1 the harmonic components
  const ExactPoly x4 = parse("x1^4");
  const auto d = polyharmonic_almansi(x4, 2);
  const ExactPoly u0 = parse("1/8*x1^4 - 3/4*x1^2*x2^2 + 1/8*x2^4");
  const ExactPoly u1 = parse("1/2*x1^2 - 1/2*x2^2");
  CHECK(d.component(0) == u0 + ExactPoly::norm_squared(2) * u1);
  CHECK(d.component(1) == ExactPoly::constant(2, Rational(3, 8)));
  CHECK(iterated_laplacian(d.component(0), 2).is_zero());
  CHECK(d.reassemble() == x4);
}

TEST_CASE("Almansi reassembly, annihilation and uniqueness on random polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> degree(0, 8), order(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    const int m = degree(rng);
    const int p = order(rng);
    const ExactPoly q = random_homogeneous(rng, n, m);
    const auto h = harmonic_almansi(q);
    CHECK(h.reassemble() == q);
    for (const auto& u : h.components) CHECK(laplacian(u).is_zero());
    const auto d = polyharmonic_almansi(q, p);
    CHECK(d.reassemble() == q);
    for (const auto& u : d.components) CHECK(iterated_laplacian(u, p).is_zero());

    auto perturbed = h;
    const auto basis = harmonic_basis(n, m);
    perturbed.components[0] += basis.front();
    CHECK_FALSE(perturbed.reassemble() == q);

    if (m >= 2 * p) {
      const auto [head, rest] = polyharmonic_split(q, p);
      CHECK(iterated_laplacian(head, p).is_zero());
      CHECK(head + ExactPoly::norm_squared(n).pow(p) * rest == q);
    }
  }
}

TEST_CASE("Almansi rejects inhomogeneous input") {
  CHECK_THROWS_AS(harmonic_almansi(parse("x1^2 + x2")), DomainError);
}

TEST_CASE("harmonic bases") {
  const auto linear = harmonic_basis(2, 1);
  CHECK(linear.size() == 2);
  const auto cubic = harmonic_basis(2, 3);
  CHECK(cubic.size() == 2);
  for (const auto& b : cubic) CHECK(laplacian(b).is_zero());
  CHECK(harmonic_basis(3, 2).size() == 5);
  for (int n : {2, 3}) {
    for (int p = 1; p <= 3; ++p) {
      for (int m = 0; m <= 6; ++m) {
        const auto basis = polyharmonic_basis(n, m, p);
        CHECK(basis.size() == dim_Hp(n, m, p));
        for (const auto& b : basis) CHECK(iterated_laplacian(b, p).is_zero());
      }
    }
  }
}

TEST_CASE("evaluation examples") {
  const NumericPoly square = to_numeric(parse("x1^2"));
  CHECK(std::abs(evaluate(square, ComplexVector::from_real(std::vector<double>{2, 0})) - 4.0) < 1e-15);
  const NumericPoly product = to_numeric(parse("x1*x2"));
  CHECK(std::abs(evaluate(product, RotatedVector(kPi / 2, {1, 1})) + 1.0) < 1e-15);
  const NumericPoly diff = to_numeric(parse("x1^2 - x2^2"));
  CHECK(std::abs(evaluate(diff, RotatedVector(kPi / 3, {1, 2})) - std::polar(3.0, 2 * kPi / 3 + kPi)) < 1e-14);
}

TEST_CASE("evaluation is homogeneous") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-1, 1), angle(0, 2 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = trial % 7;
    const NumericPoly q = to_numeric(random_homogeneous(rng, 3, m));
    const std::vector<double> a{coord(rng), coord(rng), coord(rng)};
    const double phi = angle(rng);
    const Complex plain = evaluate(q, ComplexVector::from_real(a));
    const Complex turned = evaluate(q, RotatedVector(phi, a).embed());
    CHECK(std::abs(turned - std::polar(1.0, m * phi) * plain) <= 1e-12 * std::max(1.0, std::abs(plain)));
  }
}

TEST_CASE("polynomial text round-trips exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    ExactPoly q(n);
    for (int m = 0; m <= 5; ++m) {
      if (trial % (m + 2) == 0) q += random_homogeneous(rng, n, m);
    }
    const std::string text = format_poly(q);
    CHECK(parse_exact_poly(text, n) == q);
    CHECK(format_poly(parse_exact_poly(text, n)) == text);
  }
  const NumericPoly numeric = parse_numeric_poly("(0.1,-2.5e-3)*x1^2*x3 + 1e-300*x2 - 0.30000000000000004", 3);
  CHECK(parse_numeric_poly(format_poly(numeric), 3) == numeric);
}

TEST_CASE("polynomial text grammar") {
  CHECK(parse("3/4 x1^2 x2") == parse("3/4*x1^2*x2"));
  CHECK(parse("2.5e1*x1") == parse("25*x1"));
  CHECK(parse("-(x1 - x2)^2") == parse("-x1^2 + 2*x1*x2 - x2^2"));
  CHECK(parse("z1*z2") == parse("x1*x2"));
  CHECK(format_poly(parse("0")) == "0");
  CHECK(parse_numeric_poly("(1,2)*x1", 2).terms().begin()->second == Complex(1, 2));
}

TEST_CASE("polynomial text errors carry positions") {
  auto position_of = [](const char* text) {
    try {
      parse_exact_poly(text, 2);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("x1 +* 2") == 4);
  CHECK(position_of("x3") == 1);
  CHECK(position_of("x1^1.5") == 3);
  CHECK(position_of("1/0") == 0);
  CHECK(position_of("(x1") == 3);
  CHECK(position_of("x1 $") == 3);
  CHECK_THROWS_AS(parse_exact_poly("(1,2)*x1", 2), ParseError);
}
