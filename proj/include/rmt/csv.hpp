#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace rmt {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// CSV with leading '#' comment lines (resolved config, hash, version) and a
// column header row.
class CsvWriter {
 public:
  void comment(const std::string& key, const std::string& value) {
    comments_ += "# " + key + " = " + value + "\n";
  }

  void columns(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) header_ += ",";
      header_ += names[i];
    }
    header_ += "\n";
  }

  void raw_row(const std::string& line) { body_ += line + "\n"; }

  void row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ",";
      line += cells[i];
    }
    raw_row(line);
  }

  std::string str() const { return comments_ + header_ + body_; }

 private:
  std::string comments_;
  std::string header_;
  std::string body_;
};

}  // namespace rmt
