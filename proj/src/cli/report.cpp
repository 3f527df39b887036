#include "teich/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace teich::cli {

CheckRecord& Report::add(std::string name, std::string anchor, bool pass, std::string note) {
  checks.push_back(CheckRecord{std::move(name), std::move(anchor), pass, {}, std::move(note)});
  return checks.back();
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

namespace {

bool all_passed(const std::vector<Report>& suites) {
  return std::all_of(suites.begin(), suites.end(), [](const Report& r) { return r.passed(); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string witness_string(const CheckRecord& c) {
  std::string out;
  for (const auto& [k, v] : c.witness) {
    if (!out.empty()) out += ';';
    out += k + "=" + to_string(v);
  }
  return out;
}

}  // namespace

std::string render_json(const std::string& command, const RunConfig& cfg, const std::vector<Report>& suites) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  doc["config"] = config_echo(cfg);
  auto arr = nlohmann::ordered_json::array();
  for (const Report& r : suites) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite;
    s["status"] = r.passed() ? "pass" : "fail";
    if (r.wall_time_us) s["wall_time_us"] = *r.wall_time_us;
    auto checks = nlohmann::ordered_json::array();
    for (const CheckRecord& c : r.checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["anchor"] = c.anchor;
      cj["pass"] = c.pass;
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.witness) w[k] = to_string(v);
      cj["witness"] = w;
      if (!c.note.empty()) cj["note"] = c.note;
      checks.push_back(cj);
    }
    s["checks"] = checks;
    arr.push_back(s);
  }
  doc["suites"] = arr;
  doc["status"] = all_passed(suites) ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<Report>& suites) {
  std::ostringstream out;
  out << "suite,check,anchor,status,witness,note\n";
  for (const Report& r : suites) {
    for (const CheckRecord& c : r.checks) {
      out << csv_field(r.suite) << ',' << csv_field(c.name) << ',' << csv_field(c.anchor) << ','
          << (c.pass ? "pass" : "fail") << ',' << csv_field(witness_string(c)) << ',' << csv_field(c.note)
          << '\n';
    }
  }
  return out.str();
}

std::string render_text(const std::string& command, const RunConfig& cfg, const std::vector<Report>& suites) {
  std::ostringstream out;
  out << "teichcheck " << command << "  (p=" << cfg.p << ", ell=" << cfg.ell << ", v_q=" << to_string(cfg.v_q)
      << ")\n";
  out << "gauges: tilt units v_F(t)=1; p-normalized units v_K(x)/v_K(p); rho=|t|^r ("
      << (cfg.rho_weight ? "r=" + to_string(*cfg.rho_weight) : std::string("unit norm")) << ")\n";
  for (const Report& r : suites) {
    out << "\n== " << r.suite << " ==";
    if (r.wall_time_us) out << "  [" << *r.wall_time_us << " us]";
    out << '\n';
    for (const CheckRecord& c : r.checks) {
      out << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
      const std::string w = witness_string(c);
      if (!w.empty()) out << "  {" << w << '}';
      if (!c.note.empty()) out << "  -- " << c.note;
      out << '\n';
    }
  }
  out << "\noverall: " << (all_passed(suites) ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string render(OutputFormat format, const std::string& command, const RunConfig& cfg,
                   const std::vector<Report>& suites) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(suites);
    case OutputFormat::Text: return render_text(command, cfg, suites);
    case OutputFormat::Json: break;
  }
  return render_json(command, cfg, suites);
}

}  // namespace teich::cli
