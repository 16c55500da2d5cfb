#include "zeroroot/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zeroroot {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double parse_double(const std::string& s, const std::string& key) {
  const std::string t = trim(s);
  double v = 0;
  auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  if (r.ec != std::errc() || r.ptr != t.data() + t.size() || t.empty())
    throw ConfigError("bad number for '" + key + "': '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  if (trim(t).empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, key));
  return out;
}

ConfigFile parse_config(std::istream& in) {
  ConfigFile cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "two_n") {
      const double v = parse_double(val, key);
      if (v != std::floor(v)) throw ConfigError("two_n must be an integer");
      cfg.params.two_n = int(v);
    } else if (key == "a_bar") {
      cfg.params.a_bar = parse_double(val, key);
    } else if (key == "p") {
      cfg.params.p = parse_double(val, key);
    } else if (key == "q") {
      cfg.params.q = parse_double(val, key);
    } else if (key == "xi") {
      cfg.params.xi = parse_double(val, key);
    } else if (key == "theta_bar") {
      cfg.params.theta_bar = parse_list(val, key);
    } else {
      cfg.extras[key] = val;
    }
  }
  return cfg;
}

ConfigFile read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(f);
}

std::string format_config(const ModelParams& params) {
  std::string s;
  s += "two_n=" + std::to_string(params.two_n) + "\n";
  s += "a_bar=" + shortest(params.a_bar) + "\n";
  s += "p=" + shortest(params.p) + "\n";
  s += "q=" + shortest(params.q) + "\n";
  s += "xi=" + shortest(params.xi) + "\n";
  s += "theta_bar=";
  for (std::size_t i = 0; i < params.theta_bar.size(); ++i)
    s += (i ? "," : "") + shortest(params.theta_bar[i]);
  s += "\n";
  return s;
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::str() const {
  std::string s;
  auto line = [&s](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    s += "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return s;
}

nlohmann::json params_to_json(const ModelParams& params) {
  return {{"two_n", params.two_n}, {"a_bar", params.a_bar}, {"p", params.p},
          {"q", params.q},         {"xi", params.xi},       {"theta_bar", params.theta_bar}};
}

ModelParams params_from_json(const nlohmann::json& j) {
  ModelParams p;
  p.two_n = j.at("two_n").get<int>();
  p.a_bar = j.at("a_bar").get<double>();
  p.p = j.at("p").get<double>();
  p.q = j.at("q").get<double>();
  p.xi = j.at("xi").get<double>();
  if (j.contains("theta_bar")) p.theta_bar = j.at("theta_bar").get<std::vector<double>>();
  return p;
}

nlohmann::json roots_to_json(const ZeroRootSet& roots) {
  nlohmann::json arr = nlohmann::json::array();
  for (cplx z : roots.z) arr.push_back({z.real(), z.imag()});
  return {{"two_n", roots.two_n},
          {"params", params_to_json(roots.params)},
          {"roots", arr},
          {"residual", roots.residual}};
}

ZeroRootSet roots_from_json(const nlohmann::json& j) {
  ZeroRootSet r;
  r.two_n = j.at("two_n").get<int>();
  r.params = params_from_json(j.at("params"));
  for (const auto& z : j.at("roots")) r.z.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  r.residual = j.at("residual").get<double>();
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

}  // namespace zeroroot
