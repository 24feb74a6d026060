#include "compactlab/parse.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace compactlab {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::string strip(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw Error("trailing junk after integer in '" + s + "'");
  return value;
}

// `word mass` lines, one fixed depth.
std::map<ReducedWord, Rational> read_mass_lines(const std::string& path, int rank,
                                                std::size_t& depth_out) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file '" + path + "'");
  std::map<ReducedWord, Rational> entries;
  std::size_t depth = 0;
  bool first = true;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word_text, mass_text;
    if (!(fields >> word_text >> mass_text))
      throw Error("table line " + std::to_string(line_no) + " needs `word mass`",
                  line_no);
    std::string extra;
    if (fields >> extra)
      throw Error("table line " + std::to_string(line_no) + " has trailing fields",
                  line_no);
    ReducedWord word = ReducedWord::parse(word_text, rank);
    if (word.str() != word_text && !(word_text == "1" && word.is_identity()))
      throw Error("table word '" + word_text + "' is not reduced", line_no);
    if (first) {
      depth = word.length();
      first = false;
    } else if (word.length() != depth) {
      throw Error("table mixes depths " + std::to_string(depth) + " and " +
                      std::to_string(word.length()),
                  line_no);
    }
    if (!entries.emplace(std::move(word), parse_rational(mass_text)).second)
      throw Error("table repeats word '" + word_text + "'", line_no);
  }
  if (first) throw Error("table file '" + path + "' is empty");
  depth_out = depth;
  return entries;
}

}  // namespace

CylinderMeasure parse_measure(std::string_view text, int rank) {
  if (text == "uniform") return CylinderMeasure::uniform(rank);
  if (text.rfind("dirac:", 0) == 0)
    return CylinderMeasure::dirac(BoundaryPoint::parse(text.substr(6), rank));
  if (text.rfind("table:", 0) == 0) {
    std::size_t depth = 0;
    auto masses = read_mass_lines(std::string(text.substr(6)), rank, depth);
    return CylinderMeasure::table(rank, depth, std::move(masses));
  }
  throw Error("unknown measure '" + std::string(text) +
              "' (expected uniform | dirac:<point> | table:<path>)");
}

CylinderFunction parse_function(std::string_view text, int rank) {
  if (text.rfind("cyl:", 0) == 0)
    return CylinderFunction::indicator(Cylinder{ReducedWord::parse(text.substr(4), rank)});
  if (text.rfind("const:", 0) == 0)
    return CylinderFunction::constant(rank, parse_rational(text.substr(6)));
  if (text.rfind("table:", 0) == 0) {
    std::size_t depth = 0;
    auto values = read_mass_lines(std::string(text.substr(6)), rank, depth);
    return CylinderFunction::from_values(rank, depth, std::move(values));
  }
  throw Error("unknown function '" + std::string(text) +
              "' (expected cyl:<word> | const:<p/q> | table:<path>)");
}

FiniteSupportFunction parse_finite_support(std::string_view text, int rank) {
  FiniteSupportFunction out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos)
      throw Error("perturbation entry '" + item + "' needs the form word:p/q");
    ReducedWord word = ReducedWord::parse(std::string_view(item).substr(0, colon), rank);
    if (!out.emplace(std::move(word), parse_rational(item.substr(colon + 1))).second)
      throw Error("perturbation repeats a word in '" + std::string(text) + "'");
  }
  return out;
}

LamplighterElement parse_lamplighter(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error("lamplighter element must look like (p; i1,i2,...)");
  const std::string body(text.substr(1, text.size() - 2));
  auto semi = body.find(';');
  if (semi == std::string::npos)
    throw Error("lamplighter element must look like (p; i1,i2,...)");
  LamplighterElement g;
  g.position = parse_integer(strip(body.substr(0, semi)));
  const std::string lamps = strip(body.substr(semi + 1));
  if (!lamps.empty()) {
    for (const std::string& item : split(lamps, ',')) {
      if (!g.lamps.insert(parse_integer(strip(item))).second)
        throw Error("lamp listed twice in '" + std::string(text) + "'");
    }
  }
  return g;
}

LampConfig parse_lamp_config(std::string_view text) {
  if (text.rfind("lamps:", 0) == 0) {
    std::set<long long> lit;
    const std::string rest(text.substr(6));
    if (!rest.empty()) {
      for (const std::string& item : split(rest, ',')) lit.insert(parse_integer(strip(item)));
    }
    return LampConfig::finitely_supported(std::move(lit));
  }
  if (text.rfind("window-periodic:", 0) == 0) {
    auto parts = split(text.substr(16), '|');
    if (parts.size() != 3)
      throw Error("window-periodic config needs <left>|<base>|<right>");
    auto bits = [](const std::string& s) {
      std::vector<bool> out;
      for (char c : s) {
        if (c != '0' && c != '1') throw Error("patterns are 0/1 strings");
        out.push_back(c == '1');
      }
      return out;
    };
    return LampConfig::window_periodic(bits(parts[0]), bits(parts[1]), bits(parts[2]));
  }
  throw Error("unknown configuration '" + std::string(text) +
              "' (expected lamps:... | window-periodic:...)");
}

DihedralElement parse_dihedral(std::string_view text) {
  std::string s = strip(std::string(text));
  if (s == "1" || s.empty()) return DihedralElement{};
  DihedralElement g;
  if (s.back() == 's') {
    g.flip = true;
    s = strip(s.substr(0, s.size() - 1));
    if (s.empty()) return g;
  }
  if (s.rfind("r^", 0) == 0) {
    g.shift = parse_integer(s.substr(2));
  } else if (s == "r") {
    g.shift = 1;
  } else {
    throw Error("dihedral element must look like r^k, r^k s, s or 1; got '" +
                std::string(text) + "'");
  }
  return g;
}

DeclaredSystem parse_declared_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open system file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("system file '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    std::vector<std::string> points = doc.at("points").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) -> int {
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == name) return static_cast<int>(i);
      }
      throw Error("system file names unknown point '" + name + "'");
    };
    auto image_of = [&](const nlohmann::json& mapping) {
      std::vector<int> image(points.size(), -1);
      for (const auto& [from, to] : mapping.items()) {
        image[static_cast<std::size_t>(index_of(from))] =
            index_of(to.get<std::string>());
      }
      return image;
    };
    std::vector<DeclaredClass> classes;
    for (const auto& cls : doc.at("classes")) {
      DeclaredClass c;
      c.name = cls.at("name").get<std::string>();
      c.image = image_of(cls.at("image"));
      c.declared_limit = index_of(cls.at("limit").get<std::string>());
      classes.push_back(std::move(c));
    }
    std::vector<std::vector<int>> group_generators;
    if (doc.contains("group")) {
      for (const auto& gen : doc.at("group")) group_generators.push_back(image_of(gen));
    }
    return DeclaredSystem(doc.value("name", path), std::move(points), std::move(classes),
                          std::move(group_generators));
  } catch (const nlohmann::json::exception& e) {
    throw Error("system file '" + path + "' is missing fields: " + e.what());
  }
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(line_no) + " needs key = value",
                  line_no);
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw Error("config line " + std::to_string(line_no) + " has no key");
    out[key] = value;
  }
  return out;
}

}  // namespace compactlab
