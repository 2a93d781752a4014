#include "rmt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rmt {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValue KeyValue::parse_text(const std::string& text) {
  KeyValue kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config parse error at line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config parse error at line " + std::to_string(lineno) +
                                  ": empty key");
    kv.kv_[key] = value;
  }
  return kv;
}

KeyValue KeyValue::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

std::string KeyValue::get_string(const std::string& key, const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

long long KeyValue::get_int(const std::string& key, long long fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not an integer: " + it->second);
  }
}

double KeyValue::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a number: " + it->second);
  }
}

std::vector<double> KeyValue::get_list(const std::string& key,
                                       const std::vector<double>& fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  std::vector<double> out;
  std::istringstream is(it->second);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::string t = tok;
    try {
      out.push_back(std::stod(t));
    } catch (const std::exception&) {
      throw std::invalid_argument("config key '" + key + "': bad list element: " + t);
    }
  }
  if (out.empty())
    throw std::invalid_argument("config key '" + key + "': empty list");
  return out;
}

KeyValue KeyValue::layered_under(const KeyValue& over) const {
  KeyValue merged = *this;
  for (const auto& [k, v] : over.kv_) merged.kv_[k] = v;
  return merged;
}

std::string KeyValue::canonical() const {
  std::string out;
  for (const auto& [k, v] : kv_) out += k + " = " + v + "\n";
  return out;
}

}  // namespace rmt
