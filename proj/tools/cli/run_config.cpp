#include "run_config.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "polyharm/quadrature.hpp"

namespace polyharm::cli {

namespace {

using nlohmann::json;

json range(int lo, int hi) {
  json out = json::array();
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// Keys and defaults per command. A null default means "absent unless given".
const std::map<std::string, json>& schemas() {
  static const std::map<std::string, json> table{
      {"kernel",
       {{"n", 2}, {"p", 1}, {"degrees", range(0, 8)}, {"x", nullptr}, {"zeta", nullptr}, {"points", nullptr},
        {"zetas", nullptr}, {"series_tolerance", 1e-12}, {"tolerance", nullptr}}},
      {"dirichlet",
       {{"n", 2}, {"p", 1}, {"boundary", nullptr}, {"points", nullptr}, {"resolution", "auto"},
        {"kernel_tolerance", 1e-13}, {"seed", kDefaultSeed}, {"tolerance", nullptr}}},
      {"verify",
       {{"suites", nullptr}, {"dims", {2, 3}}, {"orders", {1, 2, 3}}, {"seed", kDefaultSeed}, {"tolerance", nullptr}}},
      {"hua-limit",
       {{"n", 2}, {"u", "x1^2"}, {"z", {0.4, 0.2}}, {"p_list", {1, 2, 4, 8, 16, 64}}, {"resolution", "auto"},
        {"kernel_tolerance", 1e-14}, {"seed", kDefaultSeed}, {"tolerance", nullptr}}},
      {"almansi", {{"n", 2}, {"p", 1}, {"polynomial", nullptr}}},
      {"dims", {{"dims", {2, 3}}, {"orders", {1, 2, 3}}, {"max_degree", 8}}},
  };
  return table;
}

void require_integer(const json& v, const std::string& key, long long min) {
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  if (v.get<long long>() < min) throw ConfigError("'" + key + "' must be at least " + std::to_string(min));
}

void require_integer_list(const json& v, const std::string& key, long long min) {
  if (!v.is_array() || v.empty()) throw ConfigError("'" + key + "' must be a nonempty list");
  for (const auto& e : v) require_integer(e, key, min);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"kernel", "dirichlet", "verify", "hua-limit", "almansi", "dims"};
  return names;
}

RunConfig::RunConfig(std::string command, json doc, const Overrides& overrides) : command_(std::move(command)) {
  const auto schema_it = schemas().find(command_);
  if (schema_it == schemas().end()) throw ConfigError("unknown command '" + command_ + "'");
  const json& schema = schema_it->second;
  if (doc.is_null()) doc = json::object();
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!schema.contains(key)) throw ConfigError("unknown key '" + key + "' for command " + command_);
  }
  if (overrides.seed) {
    if (!schema.contains("seed")) throw ConfigError("--seed does not apply to " + command_);
    doc["seed"] = *overrides.seed;
  }
  if (overrides.tolerance) {
    if (!schema.contains("tolerance")) throw ConfigError("--tolerance does not apply to " + command_);
    doc["tolerance"] = *overrides.tolerance;
  }
  for (const auto& [key, fallback] : schema.items()) {
    if (!doc.contains(key)) doc[key] = fallback;
  }
  doc_ = std::move(doc);

  if (doc_.contains("n")) require_integer(doc_["n"], "n", 2);
  if (doc_.contains("p")) require_integer(doc_["p"], "p", 1);
  if (doc_.contains("max_degree")) require_integer(doc_["max_degree"], "max_degree", 0);
  for (const char* key : {"dims"}) {
    if (doc_.contains(key)) require_integer_list(doc_[key], key, 2);
  }
  for (const char* key : {"orders", "p_list"}) {
    if (doc_.contains(key)) require_integer_list(doc_[key], key, 1);
  }
  if (doc_.contains("degrees")) require_integer_list(doc_["degrees"], "degrees", 0);
  if (doc_.contains("seed") && !doc_["seed"].is_number_unsigned()) {
    throw ConfigError("'seed' must be a nonnegative integer");
  }
  for (const char* key : {"tolerance", "series_tolerance", "kernel_tolerance"}) {
    if (!doc_.contains(key) || doc_[key].is_null()) continue;
    if (!doc_[key].is_number() || !(doc_[key].get<double>() > 0.0)) {
      throw ConfigError(std::string("'") + key + "' must be a positive number");
    }
  }
  if (doc_.contains("resolution")) {
    const json& r = doc_["resolution"];
    if (!(r.is_string() && r.get<std::string>() == "auto")) require_integer(r, "resolution", 4);
  }
  for (const char* key : {"boundary", "polynomial", "u"}) {
    if (!doc_.contains(key)) continue;
    if (doc_[key].is_null()) throw ConfigError(std::string("'") + key + "' is required");
    if (!doc_[key].is_string()) throw ConfigError(std::string("'") + key + "' must be a polynomial string");
  }
  if (command_ == "dirichlet" && !doc_["points"].is_array()) throw ConfigError("'points' must be a list of points");
  if (doc_.contains("suites") && !doc_["suites"].is_null()) {
    if (!doc_["suites"].is_array()) throw ConfigError("'suites' must be a list of names");
    for (const auto& s : doc_["suites"]) {
      if (!s.is_string()) throw ConfigError("'suites' must be a list of names");
    }
  }
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc_.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const json& RunConfig::at(const std::string& key) const {
  if (!doc_.contains(key)) throw ConfigError("missing key '" + key + "'");
  return doc_[key];
}

bool RunConfig::has(const std::string& key) const { return doc_.contains(key) && !doc_[key].is_null(); }
int RunConfig::integer(const std::string& key) const { return at(key).get<int>(); }
double RunConfig::number(const std::string& key) const { return at(key).get<double>(); }
std::uint64_t RunConfig::seed() const { return at("seed").get<std::uint64_t>(); }
std::string RunConfig::text(const std::string& key) const { return at(key).get<std::string>(); }
std::vector<int> RunConfig::integers(const std::string& key) const { return at(key).get<std::vector<int>>(); }
std::vector<std::string> RunConfig::texts(const std::string& key) const {
  return at(key).get<std::vector<std::string>>();
}

std::optional<double> RunConfig::tolerance() const {
  if (!has("tolerance")) return std::nullopt;
  return number("tolerance");
}

std::optional<int> RunConfig::resolution() const {
  const json& r = at("resolution");
  if (r.is_string()) return std::nullopt;
  return r.get<int>();
}

RotatedVector RunConfig::point(const json& j) const {
  auto coords_of = [&](const json& c) {
    if (!c.is_array() || c.empty()) throw ConfigError("point coordinates must be a nonempty list of numbers");
    RealVector out;
    for (const auto& v : c) {
      if (!v.is_number()) throw ConfigError("point coordinates must be numbers");
      out.push_back(v.get<double>());
    }
    if (has("n") && static_cast<int>(out.size()) != integer("n")) {
      throw ConfigError("point has " + std::to_string(out.size()) + " coordinates, expected n = " +
                        std::to_string(integer("n")));
    }
    return out;
  };
  if (j.is_array()) return RotatedVector::real(coords_of(j));
  if (!j.is_object() || !j.contains("coords")) throw ConfigError("a point is a list or an object with 'coords'");
  for (const auto& [key, value] : j.items()) {
    if (key != "coords" && key != "sector" && key != "angle") throw ConfigError("unknown point key '" + key + "'");
  }
  if (j.contains("sector") && j.contains("angle")) throw ConfigError("give either 'sector' or 'angle', not both");
  RealVector coords = coords_of(j["coords"]);
  if (j.contains("sector")) {
    require_integer(j["sector"], "sector", 0);
    const int p = integer("p");
    const int sector = j["sector"].get<int>();
    if (sector >= p) throw ConfigError("sector index must be below p");
    return RotatedVector::sector_point(sector, p, std::move(coords));
  }
  if (j.contains("angle")) {
    if (!j["angle"].is_number()) throw ConfigError("'angle' must be a number");
    return RotatedVector(j["angle"].get<double>(), std::move(coords));
  }
  return RotatedVector::real(std::move(coords));
}

std::vector<RotatedVector> RunConfig::points(const std::string& key) const {
  const json& list = at(key);
  if (!list.is_array()) throw ConfigError("'" + key + "' must be a list of points");
  std::vector<RotatedVector> out;
  for (const auto& j : list) out.push_back(point(j));
  return out;
}

ComplexVector RunConfig::complex_point(const std::string& key) const {
  const json& list = at(key);
  if (!list.is_array() || list.empty()) throw ConfigError("'" + key + "' must be a nonempty list");
  std::vector<Complex> out;
  for (const auto& v : list) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw ConfigError("'" + key + "' entries must be numbers or [re, im] pairs");
    }
  }
  if (has("n") && static_cast<int>(out.size()) != integer("n")) {
    throw ConfigError("'" + key + "' must have n entries");
  }
  return ComplexVector(std::move(out));
}

json read_config_file(const std::optional<std::string>& path) {
  if (!path) return json::object();
  std::ifstream in(*path);
  if (!in) throw ConfigError("cannot open config '" + *path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + *path + "' is not valid JSON: " + e.what());
  }
}

std::string hex_hash(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace polyharm::cli
