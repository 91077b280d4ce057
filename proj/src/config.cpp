#include "topoedge/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topoedge/error.hpp"

namespace topoedge {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key.empty())
      throw UsageError("config line " + std::to_string(lineno) + ": empty key");
    cfg.values[key] = val;
  }
  return cfg;
}

void Config::set_kv(const std::string& kv) {
  size_t eq = kv.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("--set expects key=value, got: " + kv);
  values[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
}

std::string Config::get_str(const std::string& key, const std::string& def) const {
  auto it = values.find(key);
  return it == values.end() ? def : it->second;
}

double Config::get_double(const std::string& key, double def) const {
  auto it = values.find(key);
  if (it == values.end()) return def;
  try {
    size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': not a number: " + it->second);
  }
}

int64_t Config::get_int(const std::string& key, int64_t def) const {
  auto it = values.find(key);
  if (it == values.end()) return def;
  try {
    size_t pos = 0;
    int64_t v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': not an integer: " + it->second);
  }
}

bool Config::get_bool(const std::string& key, bool def) const {
  auto it = values.find(key);
  if (it == values.end()) return def;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw UsageError("config key '" + key + "': not a boolean: " + v);
}

std::vector<uint64_t> Config::get_seeds(const std::string& key,
                                        const std::vector<uint64_t>& def) const {
  auto it = values.find(key);
  if (it == values.end()) return def;
  std::vector<uint64_t> out;
  for (const std::string& tok : split_commas(it->second)) {
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "': bad seed: " + tok);
    }
  }
  if (out.empty()) throw UsageError("config key '" + key + "': empty seed list");
  return out;
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& def) const {
  auto it = values.find(key);
  if (it == values.end()) return def;
  std::vector<double> out;
  for (const std::string& tok : split_commas(it->second)) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "': bad number: " + tok);
    }
  }
  return out;
}

void Config::check_known(const std::vector<std::string>& known) const {
  std::string bad;
  for (const auto& [k, v] : values) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      if (!bad.empty()) bad += ", ";
      bad += k;
    }
  }
  if (!bad.empty()) throw UsageError("unknown config key(s): " + bad);
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [k, v] : values) {  // std::map iterates sorted
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

uint64_t Config::hash() const { return fnv1a64(canonical()); }

std::string Config::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

void Config::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write config file: " + path);
  out << canonical();
}

}  // namespace topoedge
