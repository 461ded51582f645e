#include <doctest.h>

#include <set>

#include "polyharm/error.hpp"
#include "polyharm/suites.hpp"

using namespace polyharm;

TEST_CASE("registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 13);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK_THROWS_AS(run_suite("no-such-suite"), DomainError);
}

TEST_CASE("unsupported dimensions are rejected, Monte Carlo ones flagged") {
  SuiteConfig four;
  four.dims = {4};
  four.orders = {1, 2};
  CHECK_THROWS_AS(run_suite("reproduction", four), DomainError);
  const auto rows = run_suite("orthogonality", four);
  REQUIRE_FALSE(rows.empty());
  bool any_statistical = false;
  for (const auto& row : rows) any_statistical |= row.statistical;
  CHECK(any_statistical);

  SuiteConfig one;
  one.dims = {1};
  CHECK_THROWS_AS(run_suite("diagonal-dim", one), DomainError);
}

TEST_CASE("small configurations pass") {
  SuiteConfig config;
  config.dims = {2};
  config.orders = {1, 2};
  for (const char* name : {"route-agreement", "diagonal-dim", "zonal-properties", "dimension-nullspace", "almansi",
                           "gegenbauer", "hua-convergence"}) {
    const auto rows = run_suite(name, config);
    REQUIRE_FALSE(rows.empty());
    for (const auto& row : rows) {
      CAPTURE(row.property);
      CAPTURE(row.label);
      CAPTURE(row.deviation);
      CHECK(row.suite == name);
      CHECK(row.passed());
    }
  }
}

TEST_CASE("tolerance override replaces every row tolerance") {
  SuiteConfig config;
  config.dims = {2};
  config.orders = {1};
  config.tolerance = 1e-300;
  const auto rows = run_suite("route-agreement", config);
  for (const auto& row : rows) CHECK(row.tolerance == 1e-300);
}

TEST_CASE("seeds drive the samples") {
  SuiteConfig a, b;
  a.dims = b.dims = {3};
  a.orders = b.orders = {2};
  b.seed = a.seed + 1;
  const auto first = run_suite("route-agreement", a);
  const auto again = run_suite("route-agreement", a);
  const auto other = run_suite("route-agreement", b);
  REQUIRE(first.size() == again.size());
  for (std::size_t k = 0; k < first.size(); ++k) CHECK(first[k].deviation == again[k].deviation);
  bool differs = false;
  for (std::size_t k = 0; k < std::min(first.size(), other.size()); ++k) differs |= first[k].deviation != other[k].deviation;
  CHECK(differs);
}
