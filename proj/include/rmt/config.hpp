#pragma once

#include <map>
#include <string>
#include <vector>

namespace rmt {

// Flat key-value configuration ("key = value" lines, '#' comments). Merge
// precedence across sources: config file over flags over defaults.
class KeyValue {
 public:
  static KeyValue parse_text(const std::string& text);
  static KeyValue parse_file(const std::string& path);

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  // comma-separated list of reals
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  // values of `over` replace values of *this
  KeyValue layered_under(const KeyValue& over) const;

  // deterministic "key = value" dump, sorted by key; used for hashing and
  // output headers
  std::string canonical() const;

  const std::map<std::string, std::string>& items() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace rmt
