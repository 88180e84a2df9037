#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "charvar/cli/config.hpp"
#include "charvar/representation.hpp"

namespace charvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Largest number of records a figdata sweep may visit.
inline constexpr long long kMaxGridPoints = 1000000;

/// {"group": "SL_R(2)", "gens": [matrix, ...]} where a matrix is an array of
/// rows and each entry is a number or a [re, im] pair. Real families are
/// written with plain numbers.
nlohmann::json representation_to_json(const Representation& rho);
Representation representation_from_json(const nlohmann::json& j);

/// Worker count for grid sweeps: CHARVAR_THREADS if set (must be a positive
/// integer), otherwise the hardware concurrency.
int thread_limit();

int cmd_retract(const RunConfig& config, std::ostream& out);
int cmd_knflow(const RunConfig& config, std::ostream& out);
int cmd_poincare(const RunConfig& config, std::ostream& out);
int cmd_figdata(const RunConfig& config, std::ostream& out);
int cmd_classify(const RunConfig& config, std::ostream& out);

/// Entry point of the charvar binary. Errors are reported on `err` as
/// {"error": {"code": ..., "message": ...}} and mapped to exit codes
/// 2 (validation) or 3 (numerical failure or failed check).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charvar::cli
