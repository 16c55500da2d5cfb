#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeroroot/spectrum.hpp"

namespace zeroroot {

struct ConfigError : Error { using Error::Error; };

// Flat key=value file. Keys other than the model parameters are kept in extras.
struct ConfigFile {
  ModelParams params;
  std::map<std::string, std::string> extras;
};

ConfigFile parse_config(std::istream& in);
ConfigFile read_config(const std::string& path);
std::string format_config(const ModelParams& params);

std::string shortest(double v);  // shortest round-trip decimal
double parse_double(const std::string& s, const std::string& key);
std::vector<double> parse_list(const std::string& s, const std::string& key);

std::string csv_number(double v);  // %.17g

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string str() const;
};

nlohmann::json params_to_json(const ModelParams& params);
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json roots_to_json(const ZeroRootSet& roots);
ZeroRootSet roots_from_json(const nlohmann::json& j);

void write_file(const std::string& path, const std::string& content);

}  // namespace zeroroot
