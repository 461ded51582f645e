// Acceptance gate: one PASS/FAIL line per criterion. Each criterion is the
// conjunction of its verification-suite rows plus, where noted, a check
// against an oracle that does not use the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyharm/gegenbauer.hpp"
#include "polyharm/polyalg.hpp"
#include "polyharm/suites.hpp"

using namespace polyharm;

namespace {

struct Selector {
  std::string suite;
  std::vector<std::string> property_prefixes;  // empty: every row of the suite
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Selector> selectors;
  std::function<std::vector<SuiteRow>()> oracle_rows;
};

std::map<std::string, std::vector<SuiteRow>> cache;

const std::vector<SuiteRow>& suite_rows(const std::string& name) {
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(name)).first;
  return it->second;
}

bool selected(const SuiteRow& row, const Selector& s) {
  if (row.suite != s.suite) return false;
  if (s.property_prefixes.empty()) return true;
  for (const auto& prefix : s.property_prefixes) {
    if (row.property.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::vector<SuiteRow> dimension_oracle() {
  std::uint64_t mismatches = 0;
  for (int n : {2, 3}) {
    for (int p = 1; p <= 3; ++p) {
      for (int m = 0; m <= 8; ++m) mismatches += dim_Hp(n, m, p) != oracle::polyharmonic_nullity(n, m, p);
    }
  }
  return {{"oracle", "dim_Hp vs dense rational nullspace rank", "n<=3 p<=3 m<=8", double(mismatches), 0.0}};
}

std::vector<SuiteRow> gegenbauer_oracle() {
  double worst = 0;
  for (int twice_lambda : {2, 3, 4, 5}) {
    const double lambda = twice_lambda / 2.0;
    for (int m = 0; m <= 30; ++m) {
      const double sup = gegenbauer(lambda, m, 1.0);
      for (int k = -50; k <= 50; ++k) {
        const mpq_class t(k, 50);
        const double exact = oracle::gegenbauer_exact(mpq_class(twice_lambda, 2), m, t);
        worst = std::max(worst, std::abs(gegenbauer(lambda, m, t.get_d()) - exact) / sup);
      }
    }
  }
  return {{"oracle", "recurrence vs exact rational sum (relative to sup)", "m<=30", worst, 1e-11}};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "route agreement", {{"route-agreement", {}}}, nullptr},
      {2, "kernel series identity", {{"series-identity", {"|closed - series|"}}}, nullptr},
      {3,
       "diagonal-dimension identity",
       {{"diagonal-dim", {}}, {"dimension-nullspace", {}}},
       dimension_oracle},
      {4, "reproducing property", {{"reproduction", {"|P_p[q](x) - q(x)|"}}}, nullptr},
      {5, "orthogonality", {{"orthogonality", {"normalized cross-degree"}}}, nullptr},
      {6,
       "Almansi exactness",
       {{"almansi", {"reassembly is exact", "components annihilated"}}},
       nullptr},
      {7, "sector-integral identities", {{"sector-integrals", {"int_S P_p", "(1/p) sum_k"}}}, nullptr},
      {8, "Cauchy-Hua convergence", {{"hua-convergence", {"|P_p - H|", "gap decreases"}}}, nullptr},
      {9, "Cauchy-Hua reproduction", {{"hua-reproduction", {"|int_LS H(z,.) u - u(z)|"}}}, nullptr},
      {10,
       "limit theorem",
       {{"limit-theorem", {"error non-increasing", "|u_64(z) - u(z)|", "|u_64(z) - Cauchy-Hua"}}},
       nullptr},
      {11,
       "Gegenbauer self-consistency",
       {{"gegenbauer", {"recurrence vs explicit sum", "partial-sum gap"}}},
       gegenbauer_oracle},
  };

  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& c : criteria) {
    std::vector<SuiteRow> rows;
    std::string error;
    try {
      for (const auto& s : c.selectors) {
        for (const auto& row : suite_rows(s.suite)) {
          if (selected(row, s)) rows.push_back(row);
        }
      }
      if (c.oracle_rows) {
        for (auto& row : c.oracle_rows()) rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool pass = error.empty() && !rows.empty();
    double worst_ratio = 0;
    for (const auto& row : rows) {
      pass &= row.passed();
      if (row.tolerance > 0) worst_ratio = std::max(worst_ratio, row.deviation / row.tolerance);
    }
    std::printf("%s criterion %d: %s (%zu checks, worst deviation/tolerance %.3g)\n", pass ? "PASS" : "FAIL",
                c.number, c.title.c_str(), rows.size(), worst_ratio);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const auto& row : rows) {
      if (!row.passed()) {
        std::printf("    %s / %s [%s]: %.6g > %.3g\n", row.suite.c_str(), row.property.c_str(), row.label.c_str(),
                    row.deviation, row.tolerance);
      }
    }
    failures += !pass;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", int(criteria.size()) - failures, criteria.size(), seconds);
  return failures == 0 ? 0 : 1;
}
