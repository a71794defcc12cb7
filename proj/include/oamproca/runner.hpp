#ifndef OAMPROCA_RUNNER_HPP
#define OAMPROCA_RUNNER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oamproca/config.hpp"

namespace oamproca::cli {

/// One output record: ordered (column, value) pairs plus an optional row
/// error. All rows of a run share the same columns.
struct ResultRow {
  int index = 0;
  std::vector<std::pair<std::string, std::string>> fields;
  std::optional<std::string> error;
};

/// Sweep values for the configured sweep section (count = 1 collapses to min).
std::vector<double> sweep_values(const SweepSpec& sweep);

/// Evaluates fn at every sweep point (or once, if no sweep section) with up
/// to `jobs` workers; rows are merged by index, so output is independent of
/// worker count. Per-point failures land in the row's error field.
std::vector<ResultRow> run_sweep(
    const RunConfig& cfg, int jobs,
    const std::function<std::vector<std::pair<std::string, std::string>>(
        const RunConfig&, int index, double value)>& fn);

/// Writes rows in the configured format with the resolved config embedded
/// ('#'-prefixed comment block for CSV, a "config" string for JSON).
/// Returns the exit code (0 or 4 on I/O failure).
int emit_rows(const RunConfig& cfg, const std::vector<ResultRow>& rows,
              const std::vector<std::string>& comments = {});

int run_mass(const RunConfig& cfg, int jobs);
int run_check_positivity(const RunConfig& cfg, int jobs);
int run_tower(const RunConfig& cfg);
int run_algebra_verify(const RunConfig& cfg);
int run_dispersion(const RunConfig& cfg, const std::string& dump_state,
                   const std::string& dump_rs, const std::string& dump_format);
int run_modes(const RunConfig& cfg);

}  // namespace oamproca::cli

#endif
