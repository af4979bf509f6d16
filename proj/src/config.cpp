#include "mesc/config.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace mesc {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  KeyValueConfig cfg;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    size_t sep = stripped.find('=');
    if (sep == std::string::npos) sep = stripped.find_first_of(" \t");
    if (sep == std::string::npos || sep == 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected key = value");
    const std::string key = trim(stripped.substr(0, sep));
    const std::string value = trim(stripped.substr(sep + 1));
    cfg.values_[key] = value;
  }
  return cfg;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<bool> KeyValueConfig::get_bool(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  std::string v = *raw;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw std::runtime_error("config key '" + key + "' has non-boolean value '" + *raw + "'");
}

std::optional<double> KeyValueConfig::get_double(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  try {
    size_t used = 0;
    const double v = std::stod(*raw, &used);
    if (used != raw->size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "' has non-numeric value '" + *raw + "'");
  }
}

std::optional<uint64_t> KeyValueConfig::get_uint(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(*raw, &used);
    if (used != raw->size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "' has non-integer value '" + *raw + "'");
  }
}

TokenizerConfig tokenizer_from_config(const KeyValueConfig& cfg, TokenizerConfig defaults) {
  if (const auto v = cfg.get_bool("case_fold")) defaults.case_fold = *v;
  if (const auto v = cfg.get_bool("strip_punct")) defaults.strip_punct = *v;
  return defaults;
}

}  // namespace mesc
