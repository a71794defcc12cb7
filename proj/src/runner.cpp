#include "oamproca/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "oamproca/algebra.hpp"
#include "oamproca/dispersion.hpp"
#include "oamproca/rs_field.hpp"
#include "oamproca/tower.hpp"

namespace oamproca::cli {

namespace {

std::string fmt_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::ostream& open_sink(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output.path.empty()) return std::cout;
  file.open(cfg.output.path, std::ios::binary);  // binary: no CRLF translation
  if (!file) throw ConfigError("cannot open output file: " + cfg.output.path, 4);
  return file;
}

}  // namespace

std::vector<double> sweep_values(const SweepSpec& sweep) {
  std::vector<double> out;
  if (!sweep.present) return out;
  for (int i = 0; i < sweep.count; ++i) {
    double v;
    if (sweep.count == 1) {
      v = sweep.min;
    } else if (sweep.scale == SweepSpec::Scale::Linear) {
      v = sweep.min + (sweep.max - sweep.min) * i / (sweep.count - 1);
    } else {
      if (!(sweep.min > 0) || !(sweep.max > 0))
        throw ConfigError("log sweep needs positive bounds", 2);
      v = sweep.min * std::pow(sweep.max / sweep.min,
                               static_cast<double>(i) / (sweep.count - 1));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<ResultRow> run_sweep(
    const RunConfig& cfg, int jobs,
    const std::function<std::vector<std::pair<std::string, std::string>>(
        const RunConfig&, int index, double value)>& fn) {
  const std::vector<double> values = sweep_values(cfg.sweep);
  const int n = cfg.sweep.present ? static_cast<int>(values.size()) : 1;
  std::vector<ResultRow> rows(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  jobs = std::max(1, jobs);
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      ResultRow& row = rows[static_cast<std::size_t>(i)];
      row.index = i;
      RunConfig point = cfg;
      double value = 0;
      try {
        if (cfg.sweep.present) {
          value = values[static_cast<std::size_t>(i)];
          apply_parameter(point, cfg.sweep.parameter, value);
        }
        row.fields = fn(point, i, value);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

int emit_rows(const RunConfig& cfg, const std::vector<ResultRow>& rows,
              const std::vector<std::string>& comments) {
  // Column set: union in first-seen order (all successful rows agree).
  std::vector<std::string> columns{"index"};
  if (cfg.sweep.present) columns.push_back(cfg.sweep.parameter);
  for (const auto& row : rows)
    for (const auto& [k, v] : row.fields)
      if (std::find(columns.begin(), columns.end(), k) == columns.end())
        columns.push_back(k);
  columns.push_back("version");
  columns.push_back("seed");
  columns.push_back("error");

  const std::vector<double> values = sweep_values(cfg.sweep);
  auto cell = [&](const ResultRow& row, const std::string& col) -> std::string {
    if (col == "index") return std::to_string(row.index);
    if (col == "version") return kVersion;
    if (col == "seed") return std::to_string(cfg.seed);
    if (col == "error") return row.error.value_or("");
    if (cfg.sweep.present && col == cfg.sweep.parameter)
      return format_double(values[static_cast<std::size_t>(row.index)]);
    for (const auto& [k, v] : row.fields)
      if (k == col) return v;
    return "";
  };

  std::ofstream file;
  std::ostream& os = open_sink(cfg, file);
  if (cfg.output.format == OutputSpec::Format::Csv) {
    std::istringstream conf(cfg.resolved_text());
    std::string line;
    while (std::getline(conf, line)) os << "# " << line << "\n";
    for (const auto& c : comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << columns[i] << (i + 1 == columns.size() ? '\n' : ',');
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        os << cell(row, columns[i]) << (i + 1 == columns.size() ? '\n' : ',');
    }
  } else {
    nlohmann::ordered_json doc;
    doc["config"] = cfg.resolved_text();
    if (!comments.empty()) doc["comments"] = comments;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json r;
      for (const auto& col : columns) r[col] = cell(row, col);
      doc["rows"].push_back(std::move(r));
    }
    os << doc.dump(2) << "\n";
  }
  os.flush();
  if (!os) throw ConfigError("write failure", 4);
  return 0;
}

namespace {

std::vector<std::pair<std::string, std::string>> mass_fields(const RunConfig& point,
                                                             proca::FormulaId id) {
  using namespace proca;
  MassResult r;
  switch (id) {
    case FormulaId::EQ1: r = mu_eq1(point.proca); break;
    case FormulaId::EQ2: r = mu_sq_eq2(point.proca); break;
    case FormulaId::EQ11: r = mu_eq11(point.proca); break;
    case FormulaId::EQ12: r = mu_eq12(point.proca); break;
  }
  const PositivityCheck pc = positivity_check(point.proca);
  std::string sigma;
  if (r.mu && *r.mu > 0)
    sigma = format_double(sigma_extract(*r.mu, point.proca.profile.omega_p0()));
  return {{"formula_id", to_string(id)},
          {"mu_sq", format_double(r.mu_sq)},
          {"mu", fmt_optional(r.mu)},
          {"holds", pc.holds ? "1" : "0"},
          {"sigma", sigma}};
}

}  // namespace

int run_mass(const RunConfig& cfg, int jobs) {
  using proca::FormulaId;
  // One row per (sweep point, formula).
  const auto point_rows = run_sweep(cfg, jobs, [](const RunConfig&, int, double) {
    return std::vector<std::pair<std::string, std::string>>{};
  });
  std::vector<ResultRow> rows;
  for (const auto& base : point_rows) {
    for (FormulaId id : {FormulaId::EQ1, FormulaId::EQ2, FormulaId::EQ11, FormulaId::EQ12}) {
      ResultRow row = base;
      if (!row.error) {
        RunConfig point = cfg;
        try {
          if (cfg.sweep.present)
            apply_parameter(point, cfg.sweep.parameter,
                            sweep_values(cfg.sweep)[static_cast<std::size_t>(base.index)]);
          row.fields = mass_fields(point, id);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return emit_rows(cfg, rows);
}

int run_check_positivity(const RunConfig& cfg, int jobs) {
  std::atomic<bool> falsified{false};
  const auto rows = run_sweep(cfg, jobs, [&](const RunConfig& point, int, double) {
    const proca::MassResult r = proca::mu_sq_eq2(point.proca);
    const proca::PositivityCheck pc = proca::positivity_check(point.proca);
    if (r.in_regime && r.mu_sq <= 0) falsified = true;
    return std::vector<std::pair<std::string, std::string>>{
        {"mu_sq", format_double(r.mu_sq)},
        {"holds", pc.holds ? "1" : "0"},
        {"in_regime", r.in_regime ? "1" : "0"},
        {"lhs", format_double(pc.lhs)},
        {"rhs", format_double(pc.rhs)}};
  });
  const int code = emit_rows(cfg, rows);
  if (code != 0) return code;
  return falsified ? 1 : 0;
}

int run_tower(const RunConfig& cfg) {
  using tower::TowerKind;
  const TowerKind kind =
      cfg.tower.kind == "bosonic" ? TowerKind::Bosonic : TowerKind::Fermionic;
  const auto levels = tower::tower_spectrum(cfg.tower.mstar, kind, cfg.tower.levels,
                                            cfg.tower.include_scalar);
  std::vector<ResultRow> rows;
  int i = 0;
  for (const auto& e : levels) {
    ResultRow row;
    row.index = i++;
    const bool half = e.twice_j % 2 != 0;
    row.fields = {{"j_num", std::to_string(half ? e.twice_j : e.twice_j / 2)},
                  {"j_den", half ? "2" : "1"},
                  {"mu", format_double(e.mu)}};
    rows.push_back(std::move(row));
  }
  return emit_rows(cfg, rows);
}

int run_algebra_verify(const RunConfig& cfg) {
  const auto report = algebra::verify_algebra(algebra::build_generators());
  std::vector<ResultRow> rows;
  bool all_pass = true;
  int i = 0;
  for (const auto& c : report) {
    all_pass = all_pass && c.pass;
    ResultRow row;
    row.index = i++;
    row.fields = {{"identity", c.name},
                  {"pass", c.pass ? "1" : "0"},
                  {"max_defect", format_double(c.max_defect)}};
    rows.push_back(std::move(row));
    std::cerr << c.name << (c.pass ? "  PASS" : "  FAIL")
              << "  defect=" << c.max_defect << "\n";
  }
  const int code = emit_rows(cfg, rows);
  if (code != 0) return code;
  return all_pass ? 0 : 1;
}

int run_dispersion(const RunConfig& cfg, const std::string& dump_state,
                   const std::string& dump_rs, const std::string& dump_format) {
  using namespace dispersion;
  const auto& d = cfg.dispersion;
  ScalarWaveState state =
      make_state(d.grid, d.length, cfg.proca.profile, d.modes);
  std::vector<ScalarWaveState> history;
  history.reserve(static_cast<std::size_t>(d.snapshots));
  history.push_back(state);
  for (int i = 1; i < d.snapshots; ++i) {
    state = evolve_scalar(state, d.dt, 1);
    history.push_back(state);
  }
  const auto samples = measure_dispersion(history);

  std::vector<std::string> comments;
  try {
    const MassFit fit = effective_mass_fit(samples);
    comments.push_back("mu_sq_fit = " + format_double(fit.mu_sq_fit));
    comments.push_back("mu_sq_stderr = " + format_double(fit.stderr_));
  } catch (const std::exception& e) {
    comments.push_back(std::string("mass fit unavailable: ") + e.what());
  }

  std::vector<ResultRow> rows;
  int i = 0;
  for (const auto& s : samples) {
    ResultRow row;
    row.index = i++;
    row.fields = {{"k", format_double(s.k)},
                  {"omega", format_double(s.omega)},
                  {"power", format_double(s.power)}};
    rows.push_back(std::move(row));
  }

  if (!dump_state.empty()) {
    std::ofstream f(dump_state, std::ios::binary);
    if (!f) throw ConfigError("cannot open dump file: " + dump_state, 4);
    if (dump_format == "bin") {
      for (int j = 0; j < state.n; ++j) {
        f.write(reinterpret_cast<const char*>(&state.u[static_cast<std::size_t>(j)]),
                sizeof(double));
        f.write(reinterpret_cast<const char*>(&state.udot[static_cast<std::size_t>(j)]),
                sizeof(double));
      }
    } else {
      f << "z,u,udot\n";
      for (int j = 0; j < state.n; ++j)
        f << format_double(j * state.dz()) << ','
          << format_double(state.u[static_cast<std::size_t>(j)]) << ','
          << format_double(state.udot[static_cast<std::size_t>(j)]) << '\n';
    }
    if (!f) throw ConfigError("write failure: " + dump_state, 4);
  }
  if (!dump_rs.empty()) {
    const auto& r = cfg.rs;
    rs::Grid3 grid{r.nx, r.ny, r.nz, r.lx, r.ly, r.lz};
    algebra::Wavevector k;
    k.p << 2.0 * std::numbers::pi * r.mode_x / r.lx,
        2.0 * std::numbers::pi * r.mode_y / r.ly,
        2.0 * std::numbers::pi * r.mode_z / r.lz;
    rs::RSField field = rs::RSField::plane_wave(
        grid, k, {r.amplitude_re, r.amplitude_im}, r.helicity);
    if (r.evolve_time > 0) field = field.evolve(r.evolve_time, 1);
    std::ofstream f(dump_rs, std::ios::binary);
    if (!f) throw ConfigError("cannot open dump file: " + dump_rs, 4);
    if (dump_format == "bin") field.write_binary(f);
    else field.write_csv(f);
    if (!f) throw ConfigError("write failure: " + dump_rs, 4);
  }
  return emit_rows(cfg, rows, comments);
}

int run_modes(const RunConfig& cfg) {
  const auto matrix = dispersion::mode_coupling_matrix(
      cfg.proca.profile, cfg.modes.ell_min, cfg.modes.ell_max, cfg.modes.k_center);
  const auto spectrum = dispersion::effective_mass_spectrum(matrix);
  std::vector<ResultRow> rows;
  int i = 0;
  for (const auto& e : spectrum) {
    ResultRow row;
    row.index = i++;
    row.fields = {{"mode_ell", std::to_string(e.mode.ell)},
                  {"k_z", format_double(e.mode.k_z)},
                  {"mu_sq_eff", format_double(e.mu_sq_eff)},
                  {"negative", e.negative ? "1" : "0"}};
    rows.push_back(std::move(row));
  }
  return emit_rows(cfg, rows);
}

}  // namespace oamproca::cli
