#pragma once

// Tabular command output with CSV and JSON emitters. Both emitters carry the
// same numbers: CSV prints 17 significant digits, JSON prints the shortest
// string that reads back to the same double.

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polyharm::cli {

enum class RowStatus { kOk, kFail, kSingular, kRejected, kWarning };

const char* status_name(RowStatus status);

struct ResultRow {
  ResultRow(std::vector<std::string> cells = {}) : inputs(std::move(cells)) {}

  std::vector<std::string> inputs;  // one cell per input column
  std::optional<std::complex<double>> value;
  std::optional<std::complex<double>> reference;
  std::optional<double> error;
  std::optional<double> bound;
  RowStatus status = RowStatus::kOk;
  std::string note;
};

class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> input_columns);

  /// Sets kFail when error exceeds bound. An error without a bound throws.
  void add(ResultRow row);

  const std::vector<std::string>& input_columns() const noexcept { return input_columns_; }
  const std::vector<ResultRow>& rows() const noexcept { return rows_; }
  nlohmann::json& metadata() noexcept { return metadata_; }
  const nlohmann::json& metadata() const noexcept { return metadata_; }

  /// 0 pass, 1 tolerance failure, 2 rejected row, 3 singular row.
  int exit_code() const;

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

  /// Every output column, in emission order.
  std::vector<std::string> columns() const;

 private:
  std::vector<std::string> input_columns_;
  std::vector<ResultRow> rows_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

std::string format_double(double v);

}  // namespace polyharm::cli
