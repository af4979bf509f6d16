#pragma once

#include <map>
#include <optional>
#include <string>

#include "mesc/tokenizer.hpp"

namespace mesc {

/// Plain `key = value` configuration file (`#` comments, blank lines
/// ignored; the `=` may be omitted in favor of whitespace). Keys are free
/// form; typed getters throw on unparseable values.
class KeyValueConfig {
 public:
  static KeyValueConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<uint64_t> get_uint(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  size_t size() const { return values_.size(); }

 private:
  std::map<std::string, std::string> values_;
};

/// The tokenizer keys named by the corpus config interface: `case_fold`,
/// `strip_punct` (and `window`, read separately by the caller).
TokenizerConfig tokenizer_from_config(const KeyValueConfig& cfg, TokenizerConfig defaults = {});

}  // namespace mesc
