#ifndef OAMPROCA_CONFIG_HPP
#define OAMPROCA_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "oamproca/proca.hpp"

namespace oamproca::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line tool.
///   0 success, 1 reported falsification / failed verification,
///   2 config parse error, 3 profile invariant violation,
///   4 I/O failure, 5 numerical singularity.
struct ConfigError : std::runtime_error {
  int exit_code;
  ConfigError(const std::string& msg, int code)
      : std::runtime_error(msg), exit_code(code) {}
};

struct SweepSpec {
  bool present = false;
  std::string parameter;
  double min = 0, max = 0;
  int count = 1;
  enum class Scale { Linear, Log } scale = Scale::Linear;
};

struct OutputSpec {
  enum class Format { Csv, Json } format = Format::Csv;
  std::string path;  // empty -> stdout
};

struct DispersionSpec {
  int grid = 256;
  double length = 64.0;
  double dt = 0.1;
  int snapshots = 4096;
  std::vector<int> modes = {1, 2, 3};
};

struct ModesSpec {
  int ell_min = -3;
  int ell_max = 3;
  double k_center = 1.0;
};

struct TowerSpec {
  double mstar = 1.0;
  std::string kind = "fermionic";
  int levels = 10;
  bool include_scalar = false;
};

struct RsSpec {
  int nx = 8, ny = 8, nz = 8;
  double lx = 6.283185307179586, ly = 6.283185307179586, lz = 6.283185307179586;
  int mode_x = 0, mode_y = 0, mode_z = 1;
  double amplitude_re = 1.0, amplitude_im = 0.0;
  int helicity = 1;
  double evolve_time = 0.0;
};

struct RunConfig {
  proca::ProcaInputs proca;  // holds the plasma profile too
  SweepSpec sweep;
  OutputSpec output;
  DispersionSpec dispersion;
  ModesSpec modes;
  TowerSpec tower;
  RsSpec rs;
  unsigned long seed = 0;

  /// Deterministic serialization of every resolved value; parsing it back
  /// reproduces this config exactly.
  std::string resolved_text() const;
};

/// INI-style sections with repeated [[perturbation]] blocks inside
/// [profile]. Unknown keys are rejected. Required keys: n0, E_amp.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

/// Applies a sweep parameter by name; throws ConfigError(2) for unknown names.
void apply_parameter(RunConfig& cfg, const std::string& name, double value);

/// Deterministic shortest "%.17g" float formatting used by all emitters.
std::string format_double(double v);

}  // namespace oamproca::cli

#endif
