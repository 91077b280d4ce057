#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace topoedge {

// Flat key=value configuration. File format: one `key = value` per line,
// blank lines and lines starting with '#' ignored.
struct Config {
  std::map<std::string, std::string> values;

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const { return values.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { values[key] = value; }

  // Parses "key=value" (as passed to --set) and stores it.
  void set_kv(const std::string& kv);

  std::string get_str(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key, double def) const;
  int64_t get_int(const std::string& key, int64_t def) const;
  bool get_bool(const std::string& key, bool def) const;
  std::vector<uint64_t> get_seeds(const std::string& key,
                                  const std::vector<uint64_t>& def) const;
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& def) const;

  // Throws UsageError naming any key not in `known`. Catches config typos.
  void check_known(const std::vector<std::string>& known) const;

  // Sorted "key = value" lines; the canonical form that gets hashed.
  std::string canonical() const;
  uint64_t hash() const;        // FNV-1a 64 over canonical()
  std::string hash_hex() const;

  void save(const std::string& path) const;
};

uint64_t fnv1a64(const std::string& s);

}  // namespace topoedge
