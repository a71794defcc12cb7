#include "oamproca/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace oamproca::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("malformed number for key: " + key, 2);
  }
}

long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("malformed number for key: " + key, 2);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("malformed boolean for key: " + key, 2);
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<int>(parse_int(key, trim(item))));
  if (out.empty()) throw ConfigError("malformed list for key: " + key, 2);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool have_n0 = false, have_e = false;
  std::string section;
  bool in_perturbation = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.rfind("[[", 0) == 0 && line.size() > 4 &&
          line.substr(line.size() - 2) == "]]") {
        const std::string block = trim(line.substr(2, line.size() - 4));
        if (block != "perturbation")
          throw ConfigError("unknown block: " + block, 2);
        cfg.proca.profile.terms.emplace_back();
        in_perturbation = true;
        section = "profile";
        continue;
      }
      if (line.back() != ']')
        throw ConfigError("malformed section header at line " + std::to_string(lineno), 2);
      section = trim(line.substr(1, line.size() - 2));
      in_perturbation = false;
      if (section != "profile" && section != "proca" && section != "sweep" &&
          section != "output" && section != "dispersion" && section != "modes" &&
          section != "tower" && section != "rs")
        throw ConfigError("unknown section: " + section, 2);
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed line " + std::to_string(lineno) + ": " + line, 2);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    auto unknown = [&] {
      throw ConfigError("unknown key: " + key +
                            (section.empty() ? "" : " (section " + section + ")"),
                        2);
    };

    if (in_perturbation) {
      auto& t = cfg.proca.profile.terms.back();
      if (key == "n_tilde") t.n_tilde = parse_number(key, value);
      else if (key == "ell0") t.ell0 = static_cast<int>(parse_int(key, value));
      else if (key == "q0") t.q0 = parse_number(key, value);
      else if (key == "phase") t.phase = parse_number(key, value);
      else unknown();
      continue;
    }

    if (section.empty()) {
      if (key == "seed") cfg.seed = static_cast<unsigned long>(parse_int(key, value));
      else unknown();
    } else if (section == "profile") {
      if (key == "n0") { cfg.proca.profile.n0 = parse_number(key, value); have_n0 = true; }
      else unknown();
    } else if (section == "proca") {
      if (key == "E_amp") { cfg.proca.E_amp = parse_number(key, value); have_e = true; }
      else if (key == "grad_phi_par") cfg.proca.grad_phi_par = parse_number(key, value);
      else if (key == "delta_v_dot") cfg.proca.delta_v_dot = parse_number(key, value);
      else if (key == "box_grad_phi_par") cfg.proca.box_grad_phi_par = parse_number(key, value);
      else if (key == "r") cfg.proca.at.r = parse_number(key, value);
      else if (key == "phi") cfg.proca.at.phi = parse_number(key, value);
      else if (key == "z") cfg.proca.at.z = parse_number(key, value);
      else unknown();
    } else if (section == "sweep") {
      cfg.sweep.present = true;
      if (key == "parameter") cfg.sweep.parameter = value;
      else if (key == "min") cfg.sweep.min = parse_number(key, value);
      else if (key == "max") cfg.sweep.max = parse_number(key, value);
      else if (key == "count") cfg.sweep.count = static_cast<int>(parse_int(key, value));
      else if (key == "scale") {
        if (value == "linear") cfg.sweep.scale = SweepSpec::Scale::Linear;
        else if (value == "log") cfg.sweep.scale = SweepSpec::Scale::Log;
        else throw ConfigError("unknown sweep scale: " + value, 2);
      } else unknown();
    } else if (section == "output") {
      if (key == "format") {
        if (value == "csv") cfg.output.format = OutputSpec::Format::Csv;
        else if (value == "json") cfg.output.format = OutputSpec::Format::Json;
        else throw ConfigError("unknown output format: " + value, 2);
      } else if (key == "path") cfg.output.path = value;
      else unknown();
    } else if (section == "dispersion") {
      if (key == "grid") cfg.dispersion.grid = static_cast<int>(parse_int(key, value));
      else if (key == "length") cfg.dispersion.length = parse_number(key, value);
      else if (key == "dt") cfg.dispersion.dt = parse_number(key, value);
      else if (key == "snapshots") cfg.dispersion.snapshots = static_cast<int>(parse_int(key, value));
      else if (key == "modes") cfg.dispersion.modes = parse_int_list(key, value);
      else unknown();
    } else if (section == "modes") {
      if (key == "ell_min") cfg.modes.ell_min = static_cast<int>(parse_int(key, value));
      else if (key == "ell_max") cfg.modes.ell_max = static_cast<int>(parse_int(key, value));
      else if (key == "k_center") cfg.modes.k_center = parse_number(key, value);
      else unknown();
    } else if (section == "tower") {
      if (key == "mstar") cfg.tower.mstar = parse_number(key, value);
      else if (key == "kind") {
        if (value != "fermionic" && value != "bosonic")
          throw ConfigError("unknown tower kind: " + value, 2);
        cfg.tower.kind = value;
      } else if (key == "levels") cfg.tower.levels = static_cast<int>(parse_int(key, value));
      else if (key == "include_scalar") cfg.tower.include_scalar = parse_bool(key, value);
      else unknown();
    } else if (section == "rs") {
      if (key == "nx") cfg.rs.nx = static_cast<int>(parse_int(key, value));
      else if (key == "ny") cfg.rs.ny = static_cast<int>(parse_int(key, value));
      else if (key == "nz") cfg.rs.nz = static_cast<int>(parse_int(key, value));
      else if (key == "lx") cfg.rs.lx = parse_number(key, value);
      else if (key == "ly") cfg.rs.ly = parse_number(key, value);
      else if (key == "lz") cfg.rs.lz = parse_number(key, value);
      else if (key == "mode_x") cfg.rs.mode_x = static_cast<int>(parse_int(key, value));
      else if (key == "mode_y") cfg.rs.mode_y = static_cast<int>(parse_int(key, value));
      else if (key == "mode_z") cfg.rs.mode_z = static_cast<int>(parse_int(key, value));
      else if (key == "amplitude_re") cfg.rs.amplitude_re = parse_number(key, value);
      else if (key == "amplitude_im") cfg.rs.amplitude_im = parse_number(key, value);
      else if (key == "helicity") cfg.rs.helicity = static_cast<int>(parse_int(key, value));
      else if (key == "evolve_time") cfg.rs.evolve_time = parse_number(key, value);
      else unknown();
    }
  }

  if (!have_n0) throw ConfigError("missing key: n0", 2);
  if (!have_e) throw ConfigError("missing key: E_amp", 2);
  if (cfg.sweep.present) {
    if (cfg.sweep.parameter.empty()) throw ConfigError("missing key: parameter", 2);
    if (cfg.sweep.count < 1) throw ConfigError("sweep count must be >= 1", 2);
  }
  if (!(cfg.proca.profile.n0 > 0)) throw ConfigError("n0 must be > 0", 3);
  if (cfg.proca.profile.total_tilde() >= cfg.proca.profile.n0)
    throw ConfigError("perturbation exceeds density", 3);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path, 4);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_parameter(RunConfig& cfg, const std::string& name, double value) {
  auto& p = cfg.proca;
  if (name == "E_amp") p.E_amp = value;
  else if (name == "grad_phi_par") p.grad_phi_par = value;
  else if (name == "delta_v_dot") p.delta_v_dot = value;
  else if (name == "box_grad_phi_par") p.box_grad_phi_par = value;
  else if (name == "r") p.at.r = value;
  else if (name == "phi") p.at.phi = value;
  else if (name == "z") p.at.z = value;
  else if (name == "n0") p.profile.n0 = value;
  else if (name == "n_tilde" || name == "n_tilde_rel" || name == "q0" || name == "phase") {
    if (p.profile.terms.empty())
      throw ConfigError("sweep parameter " + name + " needs a [[perturbation]] block", 2);
    auto& t = p.profile.terms.front();
    if (name == "n_tilde") t.n_tilde = value;
    else if (name == "n_tilde_rel") t.n_tilde = value * p.profile.n0;
    else if (name == "q0") t.q0 = value;
    else t.phase = value;
  } else {
    throw ConfigError("unknown sweep parameter: " + name, 2);
  }
}

std::string RunConfig::resolved_text() const {
  std::ostringstream os;
  auto d = [](double v) { return format_double(v); };
  os << "seed = " << seed << "\n";
  os << "[profile]\n";
  os << "n0 = " << d(proca.profile.n0) << "\n";
  for (const auto& t : proca.profile.terms) {
    os << "[[perturbation]]\n";
    os << "n_tilde = " << d(t.n_tilde) << "\n";
    os << "ell0 = " << t.ell0 << "\n";
    os << "q0 = " << d(t.q0) << "\n";
    os << "phase = " << d(t.phase) << "\n";
  }
  os << "[proca]\n";
  os << "E_amp = " << d(proca.E_amp) << "\n";
  os << "grad_phi_par = " << d(proca.grad_phi_par) << "\n";
  os << "delta_v_dot = " << d(proca.delta_v_dot) << "\n";
  os << "box_grad_phi_par = " << d(proca.box_grad_phi_par) << "\n";
  os << "r = " << d(proca.at.r) << "\n";
  os << "phi = " << d(proca.at.phi) << "\n";
  os << "z = " << d(proca.at.z) << "\n";
  if (sweep.present) {
    os << "[sweep]\n";
    os << "parameter = " << sweep.parameter << "\n";
    os << "min = " << d(sweep.min) << "\n";
    os << "max = " << d(sweep.max) << "\n";
    os << "count = " << sweep.count << "\n";
    os << "scale = " << (sweep.scale == SweepSpec::Scale::Linear ? "linear" : "log") << "\n";
  }
  os << "[output]\n";
  // The destination path is not part of the computation, so it is excluded to
  // keep outputs byte-identical regardless of where they are written.
  os << "format = " << (output.format == OutputSpec::Format::Csv ? "csv" : "json") << "\n";
  os << "[dispersion]\n";
  os << "grid = " << dispersion.grid << "\n";
  os << "length = " << d(dispersion.length) << "\n";
  os << "dt = " << d(dispersion.dt) << "\n";
  os << "snapshots = " << dispersion.snapshots << "\n";
  os << "modes = ";
  for (std::size_t i = 0; i < dispersion.modes.size(); ++i)
    os << (i ? "," : "") << dispersion.modes[i];
  os << "\n";
  os << "[modes]\n";
  os << "ell_min = " << modes.ell_min << "\n";
  os << "ell_max = " << modes.ell_max << "\n";
  os << "k_center = " << d(modes.k_center) << "\n";
  os << "[tower]\n";
  os << "mstar = " << d(tower.mstar) << "\n";
  os << "kind = " << tower.kind << "\n";
  os << "levels = " << tower.levels << "\n";
  os << "include_scalar = " << (tower.include_scalar ? "true" : "false") << "\n";
  os << "[rs]\n";
  os << "nx = " << rs.nx << "\n";
  os << "ny = " << rs.ny << "\n";
  os << "nz = " << rs.nz << "\n";
  os << "lx = " << d(rs.lx) << "\n";
  os << "ly = " << d(rs.ly) << "\n";
  os << "lz = " << d(rs.lz) << "\n";
  os << "mode_x = " << rs.mode_x << "\n";
  os << "mode_y = " << rs.mode_y << "\n";
  os << "mode_z = " << rs.mode_z << "\n";
  os << "amplitude_re = " << d(rs.amplitude_re) << "\n";
  os << "amplitude_im = " << d(rs.amplitude_im) << "\n";
  os << "helicity = " << rs.helicity << "\n";
  os << "evolve_time = " << d(rs.evolve_time) << "\n";
  return os.str();
}

}  // namespace oamproca::cli
