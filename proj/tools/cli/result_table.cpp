#include "result_table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polyharm::cli {

namespace {

const char* const kNumericColumns[] = {"value_re",     "value_im", "reference_re", "reference_im",
                                       "abs_error",    "bound"};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Numeric cells of a row in kNumericColumns order; empty when absent.
std::vector<std::optional<double>> numeric_cells(const ResultRow& row) {
  auto re = [](const auto& z) { return z ? std::optional<double>(z->real()) : std::nullopt; };
  auto im = [](const auto& z) { return z ? std::optional<double>(z->imag()) : std::nullopt; };
  return {re(row.value), im(row.value), re(row.reference), im(row.reference), row.error, row.bound};
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

const char* status_name(RowStatus status) {
  switch (status) {
    case RowStatus::kOk:
      return "ok";
    case RowStatus::kFail:
      return "fail";
    case RowStatus::kSingular:
      return "singular";
    case RowStatus::kRejected:
      return "rejected";
    case RowStatus::kWarning:
      return "warning";
  }
  return "unknown";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ResultTable::ResultTable(std::vector<std::string> input_columns) : input_columns_(std::move(input_columns)) {}

void ResultTable::add(ResultRow row) {
  if (row.inputs.size() != input_columns_.size()) throw std::logic_error("row has the wrong number of inputs");
  if (row.error && !row.bound) throw std::logic_error("error cell without a bound");
  if (row.error && row.bound && row.status == RowStatus::kOk && !(*row.error <= *row.bound)) {
    row.status = RowStatus::kFail;
  }
  rows_.push_back(std::move(row));
}

int ResultTable::exit_code() const {
  bool rejected = false, singular = false, failed = false;
  for (const auto& row : rows_) {
    rejected |= row.status == RowStatus::kRejected;
    singular |= row.status == RowStatus::kSingular;
    failed |= row.status == RowStatus::kFail;
  }
  if (rejected) return 2;
  if (singular) return 3;
  return failed ? 1 : 0;
}

std::vector<std::string> ResultTable::columns() const {
  std::vector<std::string> out = input_columns_;
  out.insert(out.end(), std::begin(kNumericColumns), std::end(kNumericColumns));
  out.push_back("status");
  out.push_back("note");
  return out;
}

void ResultTable::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : metadata_.items()) out << "# " << key << ": " << value.dump() << '\n';
  const auto cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : rows_) {
    bool first = true;
    auto cell = [&](const std::string& text) {
      out << (first ? "" : ",") << csv_escape(text);
      first = false;
    };
    for (const auto& input : row.inputs) cell(input);
    for (const auto& v : numeric_cells(row)) cell(v ? format_double(*v) : "");
    cell(status_name(row.status));
    cell(row.note);
    out << '\n';
  }
}

void ResultTable::write_json(std::ostream& out) const {
  nlohmann::json doc;
  doc["metadata"] = metadata_;
  doc["columns"] = columns();
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < input_columns_.size(); ++i) r[input_columns_[i]] = row.inputs[i];
    const auto cells = numeric_cells(row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      r[kNumericColumns[i]] = cells[i] ? json_number(*cells[i]) : nlohmann::json(nullptr);
    }
    r["status"] = status_name(row.status);
    r["note"] = row.note;
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace polyharm::cli
