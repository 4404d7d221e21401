#include "support/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fs = std::filesystem;

namespace fixtures {

std::string path(const std::string& relative) { return std::string(TTKH_FIXTURES) + "/" + relative; }

std::string read_text(const std::string& relative) {
  std::ifstream in(path(relative));
  if (!in) throw std::runtime_error("missing fixture " + relative);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ttkh::LinkDiagram load(const std::string& relative) { return ttkh::parse_pd(read_text(relative)); }

ttkh::LinkDiagram CatalogEntry::diagram() const { return load("table/" + file); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> rows = [] {
    std::vector<CatalogEntry> out;
    for (const auto& j : nlohmann::json::parse(read_text("table/catalog.json"))) {
      CatalogEntry e;
      e.name = j.at("name");
      e.file = j.at("file");
      e.knot = j.at("kind") == "knot";
      e.crossings = j.at("crossings");
      e.alternating = j.at("alternating");
      e.signature = j.at("signature");
      e.determinant = j.at("determinant");
      if (j.contains("khovanov_reduced_mod2")) {
        ttkh::Poincare p;
        for (const auto& [k, v] : j["khovanov_reduced_mod2"].items()) p[std::stoi(k)] = v;
        e.khovanov = p;
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return rows;
}

const CatalogEntry& entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no catalog entry " + name);
}

std::vector<MovePair> move_pairs() {
  std::vector<std::string> names;
  for (const auto& f : fs::directory_iterator(path("moves"))) {
    std::string stem = f.path().stem().string();
    if (stem.size() > 2 && stem.substr(stem.size() - 2) == "_a") names.push_back(stem.substr(0, stem.size() - 2));
  }
  std::sort(names.begin(), names.end());
  std::vector<MovePair> out;
  for (const auto& n : names) out.push_back({n, load("moves/" + n + "_a.pd"), load("moves/" + n + "_b.pd")});
  return out;
}

}  // namespace fixtures
