#pragma once
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "topoedge/error.hpp"

namespace topoedge {

inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Minimal CSV writer. Fields in this project never contain commas or quotes.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw DataError("cannot write file: " + path);
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

// Reads a CSV written by CsvWriter: returns rows of fields, skipping
// '#'-comment lines. First returned row is the header.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace topoedge
