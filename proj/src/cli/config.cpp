#include "teich/cli/config.hpp"

#include "teich/errors.hpp"
#include "teich/primes.hpp"

#include <fstream>
#include <set>

namespace teich::cli {

namespace {

using nlohmann::json;

long get_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return v.get<long>();
}

Rat get_rational(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("'" + key + "' must be a \"num/den\" string");
  return parse_rat(v.get<std::string>());
}

std::pair<long, long> get_range(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) throw ConfigError("'" + key + "' must be [lo, hi]");
  const std::pair<long, long> r{get_integer(v[0], key), get_integer(v[1], key)};
  if (r.first > r.second) throw ConfigError("'" + key + "' has lo > hi");
  return r;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format '" + name + "'");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a flat JSON object");
  RunConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "p") {
      cfg.p = get_integer(v, key);
    } else if (key == "ell") {
      cfg.ell = get_integer(v, key);
    } else if (key == "ell_sweep") {
      cfg.ell_sweep = get_range(v, key);
    } else if (key == "v_q") {
      cfg.v_q = get_rational(v, key);
    } else if (key == "theta_truncation") {
      cfg.theta_truncation = get_integer(v, key);
    } else if (key == "frobenius_depth") {
      cfg.frobenius_depth = get_integer(v, key);
    } else if (key == "rho_weight") {
      if (v.is_string() && v.get<std::string>() == "unit") {
        cfg.rho_weight.reset();
      } else {
        cfg.rho_weight = get_rational(v, key);
      }
    } else if (key == "padic_precision") {
      cfg.padic_precision = static_cast<int>(get_integer(v, key));
    } else if (key == "output_format") {
      if (!v.is_string()) throw ConfigError("'output_format' must be a string");
      cfg.output_format = parse_format(v.get<std::string>());
    } else if (key == "theta_sign_convention") {
      const std::string s = v.is_string() ? v.get<std::string>() : "";
      if (s == "signed") {
        cfg.theta_sign = SignConvention::Signed;
      } else if (s == "unsigned") {
        cfg.theta_sign = SignConvention::Unsigned;
      } else {
        throw ConfigError("'theta_sign_convention' must be \"signed\" or \"unsigned\"");
      }
    } else if (key == "epsilon_grid") {
      if (!v.is_array()) throw ConfigError("'epsilon_grid' must be an array of rationals");
      cfg.epsilon_grid.clear();
      for (const auto& e : v) cfg.epsilon_grid.push_back(get_rational(e, key));
    } else if (key == "chain_window") {
      cfg.chain_window = get_range(v, key);
    } else if (key == "corollary_c") {
      cfg.corollary_c = get_rational(v, key);
    } else if (key == "property_trials") {
      cfg.property_trials = get_integer(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError("'seed' must be a nonnegative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return parse_config(doc);
}

void validate(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) throw ConfigError("p = " + std::to_string(cfg.p) + " is not prime");
  if (cfg.ell % 2 == 0 || !is_prime(cfg.ell)) throw ConfigError("ell must be an odd prime");
  if (cfg.ell == cfg.p) throw ConfigError("ell must differ from p");
  if (cfg.v_q <= 0) throw ConfigError("v_q must be positive (|q| < 1)");
  if (cfg.theta_truncation < 1) throw ConfigError("theta_truncation must be >= 1");
  if (cfg.frobenius_depth < 0) throw ConfigError("frobenius_depth must be >= 0");
  if (cfg.rho_weight && *cfg.rho_weight <= 0) throw ConfigError("rho_weight must be positive");
  if (cfg.padic_precision < 1) throw ConfigError("padic_precision must be positive");
  if (cfg.ell_sweep.first < 3) throw ConfigError("ell_sweep must start at 3 or above");
  if (cfg.corollary_c <= 0) throw ConfigError("corollary_c must be positive");
  if (cfg.property_trials < 1) throw ConfigError("property_trials must be positive");
  for (const Rat& e : cfg.epsilon_grid) {
    if (e <= 0) throw ConfigError("epsilon values must be positive");
  }
}

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["p"] = cfg.p;
  j["ell"] = cfg.ell;
  j["ell_sweep"] = {cfg.ell_sweep.first, cfg.ell_sweep.second};
  j["v_q"] = to_string(cfg.v_q);
  j["theta_truncation"] = cfg.theta_truncation;
  j["frobenius_depth"] = cfg.frobenius_depth;
  j["rho_weight"] = cfg.rho_weight ? to_string(*cfg.rho_weight) : std::string("unit");
  j["padic_precision"] = cfg.padic_precision;
  j["output_format"] = format_name(cfg.output_format);
  j["theta_sign_convention"] = cfg.theta_sign == SignConvention::Signed ? "signed" : "unsigned";
  auto grid = nlohmann::ordered_json::array();
  for (const Rat& e : cfg.epsilon_grid) grid.push_back(to_string(e));
  j["epsilon_grid"] = grid;
  j["chain_window"] = {cfg.chain_window.first, cfg.chain_window.second};
  j["corollary_c"] = to_string(cfg.corollary_c);
  j["property_trials"] = cfg.property_trials;
  j["seed"] = cfg.seed;
  j["gauges"] = {
      {"tilt_units", "v_F(t) = 1 on the t-adic model of O_F"},
      {"p_normalized_units", "v_K(x) / v_K(p) inside a single untilt K"},
      {"rho", "rho = |t|_F^r; 'unit' selects the |.|_1 norm"},
      {"valuation_form", "norms reported additively: smaller valuation means larger norm"},
  };
  return j;
}

}  // namespace teich::cli
