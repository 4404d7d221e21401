#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttkh/homology.hpp"
#include "ttkh/pdcode.hpp"

namespace fixtures {

// Absolute path of a file below tests/fixtures.
std::string path(const std::string& relative);
std::string read_text(const std::string& relative);
ttkh::LinkDiagram load(const std::string& relative);

// One row of table/catalog.json; the reference values come from the knot
// and link tables, not from this code.
struct CatalogEntry {
  std::string name;
  std::string file;  // relative to table/
  bool knot = true;
  int crossings = 0;
  bool alternating = false;
  int signature = 0;
  long determinant = 0;
  std::optional<ttkh::Poincare> khovanov;  // reduced mod 2, knots only

  ttkh::LinkDiagram diagram() const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& entry(const std::string& name);

// Diagrams related by one Reidemeister move (moves/<name>_a.pd, _b.pd).
struct MovePair {
  std::string name;
  ttkh::LinkDiagram a;
  ttkh::LinkDiagram b;
};

std::vector<MovePair> move_pairs();

}  // namespace fixtures
