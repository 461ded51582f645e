#include <doctest.h>

#include <cmath>
#include <sstream>

#include "commands.hpp"
#include "polyharm/error.hpp"

using namespace polyharm::cli;
using nlohmann::json;

namespace {

void ignore(const std::string&) {}

ResultTable run(const std::string& command, json doc, const Overrides& overrides = {}) {
  return run_command(RunConfig(command, std::move(doc), overrides), ignore);
}

const ResultRow* find_row(const ResultTable& table, std::initializer_list<std::pair<std::size_t, std::string>> keys) {
  for (const auto& row : table.rows()) {
    bool match = true;
    for (const auto& [col, text] : keys) match &= row.inputs[col] == text;
    if (match) return &row;
  }
  return nullptr;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

struct Parsed {
  json metadata = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Parsed parse_csv(const std::string& text) {
  Parsed out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      out.metadata[line.substr(2, colon - 2)] = json::parse(line.substr(colon + 2));
    } else if (out.header.empty()) {
      out.header = split_csv(line);
    } else {
      out.rows.push_back(split_csv(line));
    }
  }
  return out;
}

std::string csv_of(const ResultTable& table) {
  std::ostringstream out;
  table.write_csv(out);
  return out.str();
}

json json_of(const ResultTable& table) {
  std::ostringstream out;
  table.write_json(out);
  return json::parse(out.str());
}

}  // namespace

TEST_CASE("kernel command") {
  const ResultTable table = run("kernel", {{"x", {0.5, 0.0}}, {"zeta", {1.0, 0.0}}, {"degrees", {0, 1, 2}}});
  const ResultRow* closed = find_row(table, {{2, "poisson"}, {3, "closed-form"}});
  REQUIRE(closed != nullptr);
  CHECK(std::abs(*closed->value - 3.0) < 1e-14);
  const ResultRow* hua = find_row(table, {{2, "cauchy-hua"}});
  REQUIRE(hua != nullptr);
  CHECK(std::abs(*hua->value - 4.0) < 1e-14);
  for (const auto& row : table.rows()) {
    if (row.inputs[3] == "route-gap") CHECK(*row.error < 1e-10);
  }
  CHECK(table.exit_code() == 0);

  const ResultTable origin = run("kernel", {{"n", 3}, {"p", 2}, {"x", {0.0, 0.0, 0.0}}, {"zeta", {0.0, 0.0, 1.0}}});
  const ResultRow* one = find_row(origin, {{2, "poisson"}, {3, "closed-form"}});
  CHECK(std::abs(*one->value - 1.0) < 1e-15);
}

TEST_CASE("kernel command flags pairs outside the Lie domain") {
  std::vector<std::string> warnings;
  // zeta off the unit sphere: kernel rows are rejected, the Hua row only warns
  const RunConfig config("kernel", {{"x", {0.6, 0.0}}, {"zeta", {2.0, 0.0}}, {"degrees", {1}}});
  const ResultTable table = run_command(config, [&](const std::string& w) { warnings.push_back(w); });
  const ResultRow* hua = find_row(table, {{2, "cauchy-hua"}});
  REQUIRE(hua != nullptr);
  CHECK(hua->status == RowStatus::kWarning);
  CHECK(warnings.size() == 1);
  CHECK(find_row(table, {{2, "poisson"}})->status == RowStatus::kRejected);
  CHECK(table.exit_code() == 2);
}

TEST_CASE("dirichlet command") {
  const ResultTable table =
      run("dirichlet", {{"boundary", "x1"}, {"points", {{0.3, 0.4}, {0.0, -0.2}}}});
  REQUIRE(table.rows().size() == 2);
  CHECK(std::abs(*table.rows()[0].value - 0.3) < 1e-12);
  CHECK(table.rows()[0].error.has_value());
  CHECK(table.metadata()["auto_resolution"] == true);
  CHECK(table.exit_code() == 0);

  const ResultTable biharmonic = run(
      "dirichlet", {{"p", 2}, {"boundary", "x1^2 + x2^2"}, {"points", {{0.2, 0.1}, {{"coords", {0.3, 0.3}}, {"sector", 1}}}}});
  for (const auto& row : biharmonic.rows()) {
    CHECK(row.status == RowStatus::kOk);
    CHECK(*row.error <= 1e-9);
  }

  const ResultTable outside = run("dirichlet", {{"boundary", "x1"}, {"points", {{0.3, 0.4}, {0.9, 0.9}}}});
  CHECK(outside.rows()[1].status == RowStatus::kRejected);
  CHECK(outside.exit_code() == 2);

  const ResultTable not_polyharmonic = run("dirichlet", {{"boundary", "x1^2"}, {"points", {{0.3, 0.4}}}});
  CHECK_FALSE(not_polyharmonic.rows()[0].error.has_value());
}

TEST_CASE("verify command") {
  const ResultTable table = run("verify", {{"suites", json::array({"orthogonality", "diagonal-dim"})}, {"dims", {2}}, {"orders", {2}}});
  REQUIRE_FALSE(table.rows().empty());
  CHECK(table.rows().front().inputs[0] == "orthogonality");
  CHECK(table.rows().back().inputs[0] == "diagonal-dim");
  CHECK(table.exit_code() == 0);

  const ResultTable rejected = run("verify", {{"suites", {"reproduction"}}, {"dims", {4}}});
  CHECK(rejected.exit_code() == 2);
  CHECK_THROWS_AS(run("verify", {{"suites", {"nope"}}}), ConfigError);

  const ResultTable strict = run("verify", {{"suites", {"hua-convergence"}}, {"dims", {2}}, {"orders", {1}}},
                                 Overrides{std::nullopt, 1e-300});
  CHECK(strict.exit_code() == 1);
}

TEST_CASE("hua-limit command") {
  const ResultTable table = run("hua-limit", {{"u", "1"}, {"p_list", {1, 2, 4}}});
  REQUIRE(table.rows().size() == 4);
  for (const auto& row : table.rows()) CHECK(*row.error <= 1e-12);
  CHECK(table.rows().back().inputs[1] == "cauchy-hua");
  CHECK(table.exit_code() == 0);
  CHECK(table.metadata().contains("lie_rule"));
}

TEST_CASE("almansi and dims commands") {
  const ResultTable table = run("almansi", {{"polynomial", "x1^4"}, {"p", 2}});
  const ResultRow* constant = find_row(table, {{0, "component"}, {1, "1"}});
  REQUIRE(constant != nullptr);
  CHECK(constant->inputs[3] == "3/8");
  CHECK(table.exit_code() == 0);
  CHECK_THROWS_AS(run("almansi", {{"polynomial", "x1^2 + x2"}}), ConfigError);
  CHECK_THROWS_AS(run("almansi", {{"polynomial", "x1^^2"}}), ConfigError);

  const ResultTable dims = run("dims", {{"dims", {3}}, {"orders", {2}}, {"max_degree", 4}});
  REQUIRE(dims.rows().size() == 5);
  CHECK(dims.rows()[3].inputs[5] == "10");
  CHECK(dims.rows()[4].inputs[5] == "14");
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(RunConfig("kernel", {{"colour", 1}}), ConfigError);
  CHECK_THROWS_AS(RunConfig("kernel", {{"n", 1}}), ConfigError);
  CHECK_THROWS_AS(RunConfig("kernel", {{"p", 0}}), ConfigError);
  CHECK_THROWS_AS(RunConfig("dirichlet", {{"boundary", "x1"}, {"points", {{0.1, 0.1}}}, {"resolution", 3}}),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig("dirichlet", {{"points", {{0.1, 0.1}}}}), ConfigError);
  CHECK_THROWS_AS(RunConfig("dims", json::object(), Overrides{7, std::nullopt}), ConfigError);
  CHECK_THROWS_AS(RunConfig("almansi", {{"polynomial", "x1"}}, Overrides{std::nullopt, 1e-3}), ConfigError);
  CHECK_THROWS_AS(RunConfig("verify", {{"tolerance", -1.0}}), ConfigError);
  CHECK_THROWS_AS(RunConfig("nope", json::object()), ConfigError);

  const RunConfig seeded("verify", json::object(), Overrides{7, std::nullopt});
  CHECK(seeded.seed() == 7);
  const RunConfig defaults("hua-limit", json::object());
  CHECK(defaults.effective()["p_list"].size() == 6);
  CHECK_FALSE(defaults.resolution().has_value());
  CHECK(RunConfig("verify", json::object()).hash() == RunConfig("verify", json::object()).hash());
  CHECK(RunConfig("verify", json::object()).hash() != seeded.hash());
}

TEST_CASE("CSV and JSON carry identical numbers") {
  const ResultTable table = run("kernel", {{"n", 3},
                                           {"p", 3},
                                           {"x", {{"coords", {0.2, -0.1, 0.3}}, {"sector", 2}}},
                                           {"zetas", {{0.0, 0.6, 0.8}, {{"coords", {1.0, 0.0, 0.0}}, {"sector", 1}}}}});
  const Parsed csv = parse_csv(csv_of(table));
  const json doc = json_of(table);
  CHECK(csv.metadata == doc["metadata"]);
  REQUIRE(csv.header == doc["columns"].get<std::vector<std::string>>());
  REQUIRE(csv.rows.size() == doc["rows"].size());
  std::size_t compared = 0;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    for (std::size_t c = 0; c < csv.header.size(); ++c) {
      const json& cell = doc["rows"][r][csv.header[c]];
      const std::string& text = csv.rows[r][c];
      if (cell.is_number()) {
        CHECK(std::strtod(text.c_str(), nullptr) == cell.get<double>());
        ++compared;
      } else if (cell.is_null()) {
        CHECK((text.empty() || !std::isfinite(std::strtod(text.c_str(), nullptr))));
      } else {
        CHECK(text == cell.get<std::string>());
      }
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("a run replays from its own metadata") {
  const ResultTable first = run("dirichlet", {{"p", 3}, {"boundary", "x1*x2 - 0.25"}, {"points", {{0.1, 0.2}}}});
  const json config = first.metadata()["config"];
  const ResultTable second = run("dirichlet", config);
  CHECK(csv_of(first) == csv_of(second));
  CHECK(first.metadata()["config_hash"] == second.metadata()["config_hash"]);
}

TEST_CASE("result table rules") {
  ResultTable table({"a"});
  ResultRow bare{{"x"}};
  bare.error = 1.0;
  CHECK_THROWS(table.add(bare));
  CHECK_THROWS(table.add(ResultRow{{"x", "y"}}));

  ResultRow fail{{"x"}};
  fail.error = 2.0;
  fail.bound = 1.0;
  table.add(fail);
  CHECK(table.exit_code() == 1);
  ResultRow singular{{"y"}};
  singular.status = RowStatus::kSingular;
  table.add(singular);
  CHECK(table.exit_code() == 3);
  ResultRow rejected{{"z"}};
  rejected.status = RowStatus::kRejected;
  table.add(rejected);
  CHECK(table.exit_code() == 2);

  ResultRow nan{{"w"}};
  nan.error = std::nan("");
  nan.bound = 1.0;
  ResultTable other({"a"});
  other.add(nan);
  CHECK(other.rows()[0].status == RowStatus::kFail);
  CHECK(json_of(other)["rows"][0]["abs_error"].is_null());
  CHECK(format_double(0.1) == "0.10000000000000001");
}
