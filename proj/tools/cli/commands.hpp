#pragma once

#include <functional>
#include <string>

#include "result_table.hpp"
#include "run_config.hpp"

namespace polyharm::cli {

/// Non-fatal diagnostics (e.g. Cauchy-Hua pairs outside the Lie domain).
using WarningSink = std::function<void(const std::string&)>;

ResultTable cmd_kernel(const RunConfig& config, const WarningSink& warn);
ResultTable cmd_dirichlet(const RunConfig& config, const WarningSink& warn);
ResultTable cmd_verify(const RunConfig& config, const WarningSink& warn);
ResultTable cmd_hua_limit(const RunConfig& config, const WarningSink& warn);
ResultTable cmd_almansi(const RunConfig& config, const WarningSink& warn);
ResultTable cmd_dims(const RunConfig& config, const WarningSink& warn);

/// Dispatches on config.command() and fills the shared metadata.
ResultTable run_command(const RunConfig& config, const WarningSink& warn);

}  // namespace polyharm::cli
