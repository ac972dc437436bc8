#include "dpstab/familyfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dpstab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

FamilyFile parse_family_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<int>> weights;
  std::optional<std::vector<std::string>> vars;
  std::optional<int> degree, degree_h;
  std::optional<std::string> ftext, htext;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto starts = [&](const char* key) {
      return line.rfind(key, 0) == 0;
    };
    if (starts("weights:")) {
      std::vector<int> w;
      for (const std::string& tok : split_commas(line.substr(8)))
        w.push_back(std::stoi(tok));
      weights = w;
    } else if (starts("vars:")) {
      vars = split_commas(line.substr(5));
    } else if (starts("degree_H:")) {
      degree_h = std::stoi(trim(line.substr(9)));
    } else if (starts("degree:")) {
      degree = std::stoi(trim(line.substr(7)));
    } else if (starts("F")) {
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("family file: malformed F line");
      ftext = trim(line.substr(eq + 1));
    } else if (starts("H")) {
      size_t eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("family file: malformed H line");
      htext = trim(line.substr(eq + 1));
    } else {
      throw std::invalid_argument("family file: unrecognized line '" + line + "'");
    }
  }
  if (!weights || !vars || !degree || !ftext)
    throw std::invalid_argument("family file: weights, vars, degree and F are required");
  if (degree_h.has_value() != htext.has_value())
    throw std::invalid_argument("family file: degree_H and H must come together");
  WeightSystem ws(*weights);
  if (static_cast<int>(vars->size()) != ws.n())
    throw std::invalid_argument("family file: vars/weights arity mismatch");
  WPoly F = parse_wpoly(*ftext, ws, *vars, *degree);
  if (htext) {
    WPoly H = parse_wpoly(*htext, ws, *vars, *degree_h);
    return FamilyFile{ws, *vars, *degree, degree_h,
                      CIFamily(ws, *degree, *degree_h, std::move(F), std::move(H))};
  }
  return FamilyFile{ws, *vars, *degree, std::nullopt,
                    HypersurfaceFamily(ws, *degree, std::move(F))};
}

FamilyFile load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_file(ss.str());
}

std::string write_family_file(const AnyFamily& fam, const std::vector<std::string>& names) {
  std::ostringstream os;
  const WeightSystem& ws = family_weights(fam);
  os << "weights: ";
  for (int i = 0; i < ws.n(); ++i) os << (i ? "," : "") << ws.weight(i);
  os << "\nvars: ";
  for (size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  if (std::holds_alternative<HypersurfaceFamily>(fam)) {
    const auto& h = std::get<HypersurfaceFamily>(fam);
    os << "\ndegree: " << h.degree << "\nF = " << print_wpoly(h.F, names) << "\n";
  } else {
    const auto& ci = std::get<CIFamily>(fam);
    os << "\ndegree: " << ci.deg_F << "\ndegree_H: " << ci.deg_H;
    os << "\nF = " << print_wpoly(ci.F, names);
    os << "\nH = " << print_wpoly(ci.H, names) << "\n";
  }
  return os.str();
}

}  // namespace dpstab
