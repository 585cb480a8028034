#pragma once

// The built-in polytope corpus used by `verify --corpus`.

#include <string>
#include <vector>

#include "facecode/constructors.hpp"

namespace facecode {

inline std::vector<std::string> corpus_recipes() {
  std::vector<std::string> out;
  for (int n = 3; n <= 5; ++n) out.push_back("simplex " + std::to_string(n));
  for (int n = 2; n <= 5; ++n) out.push_back("cube " + std::to_string(n));
  for (int m = 3; m <= 8; ++m) out.push_back("polygon " + std::to_string(m));
  for (int m = 3; m <= 8; ++m) out.push_back("prism " + std::to_string(m));
  out.push_back("product (polygon 6) (cube 2)");
  out.push_back("product (simplex 2) (cube 2)");
  for (const std::string base : {"simplex 3", "cube 3"}) {
    std::string r = base;
    for (int depth = 1; depth <= 3; ++depth) {
      r = "vcut (" + r + ") 0";
      out.push_back(r);
    }
  }
  out.push_back("dualcyclic57");
  return out;
}

inline std::vector<SimplePolytope> corpus() {
  std::vector<SimplePolytope> out;
  for (const auto& r : corpus_recipes()) out.push_back(build_recipe(r));
  return out;
}

}  // namespace facecode
