#include <cctype>
#include <sstream>

#include "btq/cw.hpp"

namespace btq::cw {

namespace {

void check_label(const std::string& label) {
  if (label.empty()) throw CwError("empty label");
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch))) throw CwError("label contains whitespace: '" + label + "'");
  }
}

std::string signed_label(const Complex& c, SignedEdge s) {
  return (s.sign > 0 ? "+" : "-") + c.edges.at(s.edge).label;
}

std::pair<std::string, int> parse_signed(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
    throw CwError("boundary entry must start with + or -: '" + tok + "'");
  }
  return {tok.substr(1), tok[0] == '+' ? 1 : -1};
}

}  // namespace

std::string to_text(const Complex& c) {
  std::ostringstream os;
  for (const auto& v : c.vertices) {
    check_label(v);
    os << "V " << v << "\n";
  }
  for (const auto& e : c.edges) {
    check_label(e.label);
    os << "E " << e.label << " " << c.vertices.at(e.src) << " " << c.vertices.at(e.dst) << "\n";
  }
  for (const auto& f : c.faces) {
    check_label(f.label);
    os << "F " << f.label;
    for (const auto& s : f.boundary) os << " " << signed_label(c, s);
    os << "\n";
  }
  return os.str();
}

Complex from_text(const std::string& text) {
  Complex c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    try {
      if (kind == "V" && toks.size() == 1) {
        c.add_vertex(toks[0]);
      } else if (kind == "E" && toks.size() == 3) {
        c.add_edge(toks[0], toks[1], toks[2]);
      } else if (kind == "F" && toks.size() >= 2) {
        std::vector<std::pair<std::string, int>> word;
        for (std::size_t i = 1; i < toks.size(); ++i) word.push_back(parse_signed(toks[i]));
        c.add_face(toks[0], word);
      } else {
        throw CwError("malformed line");
      }
    } catch (const CwError& e) {
      throw CwError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

nlohmann::json to_json(const Complex& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.edges) {
    edges.push_back({{"label", e.label}, {"src", c.vertices.at(e.src)}, {"dst", c.vertices.at(e.dst)}});
  }
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : c.faces) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& s : f.boundary) word.push_back(signed_label(c, s));
    faces.push_back({{"label", f.label}, {"boundary", word}});
  }
  return {{"vertices", c.vertices}, {"edges", edges}, {"faces", faces}};
}

Complex complex_from_json(const nlohmann::json& j) {
  Complex c;
  for (const auto& v : j.at("vertices")) c.add_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    c.add_edge(e.at("label").get<std::string>(), e.at("src").get<std::string>(), e.at("dst").get<std::string>());
  }
  for (const auto& f : j.at("faces")) {
    std::vector<std::pair<std::string, int>> word;
    for (const auto& t : f.at("boundary")) word.push_back(parse_signed(t.get<std::string>()));
    c.add_face(f.at("label").get<std::string>(), word);
  }
  return c;
}

}  // namespace btq::cw
