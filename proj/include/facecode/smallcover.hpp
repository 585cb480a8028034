#pragma once

// Z_2^r-colorings of a simple polytope read as small-cover characteristic data.
// Only the combinatorial consequences are computed; no manifold is built.

#include <cstdint>
#include <set>
#include <vector>

#include "facecode/error.hpp"
#include "facecode/facecodes.hpp"
#include "facecode/gf2.hpp"
#include "facecode/polytope.hpp"

namespace facecode {

struct VectorColoring {
  int r = 0;
  std::vector<BitVector> colors;  // one nonzero vector of length r per facet

  static VectorColoring standard_lift(const SimplePolytope& p, const Coloring& c) {
    VectorColoring out;
    out.r = p.dim();
    for (int color : c.colors) out.colors.push_back(BitVector::unit(static_cast<std::size_t>(out.r), static_cast<std::size_t>(color)));
    return out;
  }
};

inline void check_coloring_shape(const SimplePolytope& p, const VectorColoring& lambda) {
  require(lambda.r >= 1, ErrorKind::InvalidInput, "coloring rank must be positive");
  require(static_cast<int>(lambda.colors.size()) == p.num_facets(), ErrorKind::InvalidInput,
          "coloring has " + std::to_string(lambda.colors.size()) + " colors for " + std::to_string(p.num_facets()) +
              " facets");
  for (const auto& c : lambda.colors) {
    require(static_cast<int>(c.size()) == lambda.r, ErrorKind::InvalidInput, "color vector of the wrong length");
    require(!c.is_zero(), ErrorKind::InvalidInput, "every facet needs a nonzero color");
  }
}

/// True iff at every vertex the n incident facet colors are linearly independent.
inline bool validate_characteristic(const SimplePolytope& p, const VectorColoring& lambda) {
  check_coloring_shape(p, lambda);
  require(lambda.r == p.dim(), ErrorKind::InvalidInput,
          "characteristic data needs r = n = " + std::to_string(p.dim()) + ", got r = " + std::to_string(lambda.r));
  for (int v = 0; v < p.num_vertices(); ++v) {
    std::vector<BitVector> at_v;
    for (int f : p.vertex_facets(v)) at_v.push_back(lambda.colors[static_cast<std::size_t>(f)]);
    if (gf2::LinearCode::reduce(static_cast<std::size_t>(lambda.r), at_v).dim() != p.dim()) return false;
  }
  return true;
}

inline int coloring_rank(const VectorColoring& mu) {
  return gf2::LinearCode::reduce(static_cast<std::size_t>(mu.r), mu.colors).dim();
}

/// Number of connected components of the space glued from (P, mu): 2^(r - rank mu).
inline std::uint64_t component_count(const SimplePolytope& p, const VectorColoring& mu) {
  check_coloring_shape(p, mu);
  return std::uint64_t{1} << (mu.r - coloring_rank(mu));
}

struct InvolutionReport {
  bool admits = false;
  std::size_t image_size = 0;
  int fixed_points = 0;                 // |V(P)| when admits
  std::vector<std::int64_t> betti;      // mod-2 Betti numbers = h-vector when admits
};

/// A regular m-involution exists iff the image of lambda is exactly n vectors
/// (then a basis). Its fixed points are the vertices; Betti numbers are h_i.
inline InvolutionReport admits_regular_m_involution(const SimplePolytope& p, const VectorColoring& lambda) {
  require(validate_characteristic(p, lambda), ErrorKind::InvalidInput, "coloring is not characteristic (degenerate at a vertex)");
  InvolutionReport r;
  std::set<BitVector> image(lambda.colors.begin(), lambda.colors.end());
  r.image_size = image.size();
  r.admits = static_cast<int>(image.size()) == p.dim();
  if (r.admits) {
    const std::vector<BitVector> img(image.begin(), image.end());
    expect_theorem(gf2::LinearCode::reduce(static_cast<std::size_t>(lambda.r), img).dim() == p.dim(),
                   "image of a characteristic function with n elements is not a basis");
    const auto fh = fh_vectors(p);
    r.fixed_points = p.num_vertices();
    r.betti = fh.h;
    expect_theorem(is_even(p), "regular m-involution on a polytope that is not n-colorable");
  }
  return r;
}

}  // namespace facecode
