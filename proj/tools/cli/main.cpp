// polyharm: kernels, Dirichlet solves and verification suites from a JSON config.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "polyharm/error.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSingular = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace polyharm::cli;

  CLI::App app{"Polyharmonic kernels on unions of rotated balls"};
  app.require_subcommand(1);
  std::optional<std::string> config_path, out_path;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "overrides the config seed");
  app.add_option("--tolerance", tolerance, "overrides every row bound")->check(CLI::PositiveNumber);

  const std::map<std::string, std::string> help{
      {"kernel", "zonal polyharmonics, Poisson and Cauchy-Hua kernels at given points"},
      {"dirichlet", "solve the Dirichlet problem for polynomial boundary data"},
      {"verify", "run verification suites"},
      {"hua-limit", "u_p(z) for increasing p against the Cauchy-Hua integral"},
      {"almansi", "exact Almansi decomposition of a homogeneous polynomial"},
      {"dims", "dimension tables of P_m, H_m and H^p_m"},
  };
  for (const auto& name : command_names()) {
    app.add_subcommand(name, help.at(name))->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const RunConfig config(command, read_config_file(config_path), Overrides{seed, tolerance});
    const ResultTable table = run_command(config, [](const std::string& message) {
      std::cerr << "warning: " << message << '\n';
    });
    std::ofstream file;
    if (out_path) {
      file.open(*out_path);
      if (!file) {
        std::cerr << "error: cannot write '" << *out_path << "'\n";
        return kExitConfig;
      }
    }
    std::ostream& out = out_path ? file : std::cout;
    if (format == "json") {
      table.write_json(out);
    } else {
      table.write_csv(out);
    }
    return table.exit_code();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const polyharm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const polyharm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const polyharm::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const polyharm::SingularEvaluation& e) {
    std::cerr << "singular: " << e.what() << '\n';
    return kExitSingular;
  }
}
