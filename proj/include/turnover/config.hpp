#ifndef TURNOVER_CONFIG_HPP
#define TURNOVER_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace turnover {

// Plain-text key-value dialect shared by ingest schemas, generator specs and
// simulation scenarios.  Lines are `key = value`, `#` starts a comment,
// repeated keys accumulate in file order.  Values may carry structured
// payloads (whitespace-separated tokens, `name=value` attributes) that the
// consumer parses with the helpers below.
class Config {
 public:
  Config() = default;

  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  // Single-valued lookup; throws std::invalid_argument if the key repeats.
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::string require(const std::string& key) const;
  std::vector<std::string> get_all(const std::string& key) const;

  double get_double_or(const std::string& key, double fallback) const;
  long get_long_or(const std::string& key, long fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Splits a structured value into whitespace-separated tokens.
std::vector<std::string> split_tokens(const std::string& value);

// Splits on a single-character delimiter; empty input gives an empty list.
std::vector<std::string> split_list(const std::string& value, char sep);

// Extracts `name=value` attributes from a token list; bare tokens are
// returned in positional order.
struct TokenAttrs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;

  std::optional<std::string> attr(const std::string& name) const;
  double attr_double_or(const std::string& name, double fallback) const;
  long attr_long_or(const std::string& name, long fallback) const;
};
TokenAttrs parse_attrs(const std::string& value);

double parse_double(const std::string& text, const std::string& what);
long parse_long(const std::string& text, const std::string& what);
bool parse_bool(const std::string& text, const std::string& what);

}  // namespace turnover

#endif
