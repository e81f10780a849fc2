#include "ellgen/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace ellgen {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parse_long(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, what + " must be an integer, got '" + s + "'");
}

bool parse_bool(const std::string& s, int line) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ParseError(line, "expected true or false, got '" + s + "'");
}

struct Edge {
  std::string a, b;
  long m;
  int line;
};

}  // namespace

ConfigFile parse_config(const std::string& text) {
  enum class Section { None, Surface, Curve, Intersection } section = Section::None;
  ConfigFile cfg;
  std::map<std::string, int> surface_keys;
  std::set<std::string> labels;
  std::vector<Edge> edges;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s == "[surface]") section = Section::Surface;
      else if (s == "[curve]") section = Section::Curve;
      else if (s == "[intersection]") section = Section::Intersection;
      else throw ParseError(line, "unknown section " + s);
      continue;
    }

    switch (section) {
      case Section::None:
        throw ParseError(line, "record outside of a section");

      case Section::Surface: {
        const auto eq = s.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
          key = strip(s.substr(0, eq));
          value = strip(s.substr(eq + 1));
        } else {
          const auto t = tokens(s);
          if (t.size() != 2) throw ParseError(line, "expected 'key = value'");
          key = t[0];
          value = t[1];
        }
        if (key != "c1sq" && key != "c2") throw ParseError(line, "unknown surface key '" + key + "'");
        if (surface_keys.count(key)) throw ParseError(line, "duplicate surface key '" + key + "'");
        surface_keys[key] = line;
        (key == "c1sq" ? cfg.model.c1sq : cfg.model.c2) = parse_long(value, line, key);
        break;
      }

      case Section::Curve: {
        const auto t = tokens(s);
        Curve c;
        c.label = t[0];
        if (c.label.find('=') != std::string::npos) throw ParseError(line, "curve record must start with a label");
        if (!labels.insert(c.label).second) throw ParseError(line, "duplicate label '" + c.label + "'");
        bool have_self = false;
        std::set<std::string> seen;
        for (std::size_t i = 1; i < t.size(); ++i) {
          const auto eq = t[i].find('=');
          if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + t[i] + "'");
          const std::string key = t[i].substr(0, eq), value = t[i].substr(eq + 1);
          if (!seen.insert(key).second) throw ParseError(line, "duplicate key '" + key + "'");
          if (key == "genus") {
            c.genus = static_cast<int>(parse_long(value, line, "genus"));
          } else if (key == "self_int") {
            c.self_int = parse_long(value, line, "self_int");
            have_self = true;
          } else if (key == "exceptional") {
            c.exceptional = parse_bool(value, line);
          } else if (key == "coeff") {
            try {
              cfg.coeffs[c.label] = parse_rational(value);
            } catch (const std::invalid_argument& e) {
              throw ParseError(line, e.what());
            }
          } else {
            throw ParseError(line, "unknown curve key '" + key + "'");
          }
        }
        if (!have_self) throw ParseError(line, "curve '" + c.label + "' lacks self_int");
        cfg.model.curves.push_back(c);
        break;
      }

      case Section::Intersection: {
        const auto t = tokens(s);
        if (t.size() != 3) throw ParseError(line, "expected 'label label multiplicity'");
        const long m = parse_long(t[2], line, "multiplicity");
        if (m <= 0) throw ParseError(line, "multiplicity must be positive");
        if (t[0] == t[1]) throw ParseError(line, "self-intersections belong to the curve record");
        edges.push_back({t[0], t[1], m, line});
        break;
      }
    }
  }

  for (const char* key : {"c1sq", "c2"})
    if (!surface_keys.count(key)) throw ParseError(line, std::string("missing surface key '") + key + "'");

  const std::size_t n = cfg.model.size();
  cfg.model.pair_int = IntMatrix::Zero(static_cast<long>(n), static_cast<long>(n));
  for (const auto& e : edges) {
    const auto i = cfg.model.index_of(e.a), j = cfg.model.index_of(e.b);
    if (!i) throw ParseError(e.line, "undeclared label '" + e.a + "'");
    if (!j) throw ParseError(e.line, "undeclared label '" + e.b + "'");
    auto& x = cfg.model.pair_int(static_cast<long>(*i), static_cast<long>(*j));
    if (x != 0) throw ParseError(e.line, "duplicate intersection " + e.a + " " + e.b);
    x = e.m;
    cfg.model.pair_int(static_cast<long>(*j), static_cast<long>(*i)) = e.m;
  }
  return cfg;
}

std::string render_config(const ConfigFile& cfg) {
  std::ostringstream out;
  const auto& m = cfg.model;
  out << "[surface]\nc1sq = " << m.c1sq << "\nc2 = " << m.c2 << "\n";
  if (!m.curves.empty()) out << "[curve]\n";
  for (const auto& c : m.curves) {
    out << c.label << " genus=" << c.genus << " self_int=" << c.self_int
        << " exceptional=" << (c.exceptional ? "true" : "false");
    if (auto it = cfg.coeffs.find(c.label); it != cfg.coeffs.end()) out << " coeff=" << to_string(it->second);
    out << "\n";
  }
  bool header = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const long x = m.dot(i, j);
      if (x == 0) continue;
      if (!header) out << "[intersection]\n";
      header = true;
      out << m.curves[i].label << " " << m.curves[j].label << " " << x << "\n";
    }
  }
  return out.str();
}

ConfigFile read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace ellgen
