#include "turnover/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turnover {

namespace {

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected `key = value`, got: " + line);
    }
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    }
    cfg.entries_.emplace_back(std::move(key), std::move(value));
  }
  return cfg;
}

bool Config::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

std::optional<std::string> Config::get(const std::string& key) const {
  std::optional<std::string> found;
  for (const auto& [k, v] : entries_) {
    if (k != key) continue;
    if (found) throw std::invalid_argument("config key repeats but is single-valued: " + key);
    found = v;
  }
  return found;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  auto v = get(key);
  return v ? *v : fallback;
}

std::string Config::require(const std::string& key) const {
  auto v = get(key);
  if (!v) throw std::invalid_argument("missing required config key: " + key);
  return *v;
}

std::vector<std::string> Config::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (k == key) out.push_back(v);
  return out;
}

double Config::get_double_or(const std::string& key, double fallback) const {
  auto v = get(key);
  return v ? parse_double(*v, key) : fallback;
}

long Config::get_long_or(const std::string& key, long fallback) const {
  auto v = get(key);
  return v ? parse_long(*v, key) : fallback;
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
  auto v = get(key);
  return v ? parse_bool(*v, key) : fallback;
}

std::vector<std::string> split_tokens(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_list(const std::string& value, char sep) {
  std::vector<std::string> out;
  if (value.empty()) return out;
  size_t start = 0;
  while (true) {
    auto pos = value.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(value.substr(start));
      break;
    }
    out.push_back(value.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::optional<std::string> TokenAttrs::attr(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) return std::nullopt;
  return it->second;
}

double TokenAttrs::attr_double_or(const std::string& name, double fallback) const {
  auto v = attr(name);
  return v ? parse_double(*v, name) : fallback;
}

long TokenAttrs::attr_long_or(const std::string& name, long fallback) const {
  auto v = attr(name);
  return v ? parse_long(*v, name) : fallback;
}

TokenAttrs parse_attrs(const std::string& value) {
  TokenAttrs out;
  for (const auto& tok : split_tokens(value)) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      out.positional.push_back(tok);
    } else {
      out.named[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric value for " + what + ": " + text);
  }
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer value for " + what + ": " + text);
  }
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument("bad boolean value for " + what + ": " + text);
}

}  // namespace turnover
