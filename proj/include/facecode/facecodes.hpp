#pragma once

// Face codes B_k(P): the binary code spanned by the vertex indicators of all
// codimension-k faces of a simple polytope, together with the colorability,
// self-duality, duality and doubly-even relations they satisfy.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "facecode/combinatorics.hpp"
#include "facecode/constructors.hpp"
#include "facecode/error.hpp"
#include "facecode/gf2.hpp"
#include "facecode/polytope.hpp"

namespace facecode {

struct FaceCode {
  int k = 0;
  gf2::LinearCode code;
  std::vector<Face> faces;  // lexicographic by defining facets; faces[i].vertices is the i-th generator
};

inline FaceCode face_code(const SimplePolytope& p, int k) {
  FaceCode out;
  out.k = k;
  out.faces = faces_of_codim(p, k);
  std::vector<BitVector> gens;
  gens.reserve(out.faces.size());
  for (const auto& f : out.faces) gens.push_back(f.vertices);
  out.code = gf2::LinearCode::reduce(static_cast<std::size_t>(p.num_vertices()), gens);
  return out;
}

/// Code matrix M_k(P): one row per vertex, column j is the indicator of the
/// j-th codimension-k face.
inline std::vector<BitVector> code_matrix(const SimplePolytope& p, int k) {
  const auto faces = faces_of_codim(p, k);
  std::vector<BitVector> rows(static_cast<std::size_t>(p.num_vertices()), BitVector(faces.size()));
  for (std::size_t j = 0; j < faces.size(); ++j) {
    for (auto v : faces[j].vertices.support()) rows[v].set(j);
  }
  return rows;
}

inline std::int64_t h_prefix(const FHVectors& fh, int k) {
  return std::accumulate(fh.h.begin(), fh.h.begin() + k + 1, std::int64_t{0});
}

// ---------------------------------------------------------------------------
// Colorings

/// Facet coloring with colors 0..n-1.
struct Coloring {
  std::vector<int> colors;

  /// Every vertex sees n distinct colors.
  bool proper_on(const SimplePolytope& p) const {
    if (static_cast<int>(colors.size()) != p.num_facets()) return false;
    for (int v = 0; v < p.num_vertices(); ++v) {
      std::vector<bool> seen(static_cast<std::size_t>(p.dim()), false);
      for (int f : p.vertex_facets(v)) {
        const int c = colors[static_cast<std::size_t>(f)];
        if (c < 0 || c >= p.dim() || seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = true;
      }
    }
    return true;
  }
};

/// Backtracking n-coloring of the facet adjacency graph (facets adjacent iff
/// they share a vertex). Facets are colored in index order, colors tried in
/// increasing order, so facet 0 always gets color 0 and the result is canonical.
inline std::optional<Coloring> find_coloring(const SimplePolytope& p) {
  const int m = p.num_facets();
  const int n = p.dim();
  std::vector<std::vector<int>> earlier(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < f; ++g) {
      if (p.facet_indicator(f).intersects(p.facet_indicator(g))) earlier[static_cast<std::size_t>(f)].push_back(g);
    }
  }
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(m), -1);
  auto search = [&](auto&& self, int f) -> bool {
    if (f == m) return true;
    for (int color = 0; color < n; ++color) {
      bool clash = false;
      for (int g : earlier[static_cast<std::size_t>(f)]) {
        if (c.colors[static_cast<std::size_t>(g)] == color) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      c.colors[static_cast<std::size_t>(f)] = color;
      if (self(self, f + 1)) return true;
      // Symmetry: a color unused so far is interchangeable with any other unused one.
      bool color_used_before = false;
      for (int g = 0; g < f; ++g) color_used_before |= c.colors[static_cast<std::size_t>(g)] == color;
      c.colors[static_cast<std::size_t>(f)] = -1;
      if (!color_used_before) break;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return c;
}

/// Color classes of a coloring: classes[i] lists the facets of color i.
inline std::vector<std::vector<int>> color_classes(const SimplePolytope& p, const Coloring& c) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(p.dim()));
  for (int f = 0; f < p.num_facets(); ++f) classes[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(f)])].push_back(f);
  return classes;
}

/// True iff each class consists of pairwise disjoint facets whose indicators sum to the all-ones vector.
inline bool is_perfect_cover_partition(const SimplePolytope& p, const std::vector<std::vector<int>>& classes) {
  const auto nv = static_cast<std::size_t>(p.num_vertices());
  for (const auto& cls : classes) {
    BitVector covered(nv);
    for (int f : cls) {
      if (covered.intersects(p.facet_indicator(f))) return false;
      covered ^= p.facet_indicator(f);
    }
    if (covered != BitVector::ones(nv)) return false;
  }
  return true;
}

struct ColorabilityReport {
  bool degenerate_dimension = false;  // n < 3: only the direct search is reported
  bool direct = false;                // (1) a proper n-coloring exists
  bool partition = false;             // (2) facets split into n perfect covers
  bool inclusion_chain = false;       // (3) B_0 in B_1 in ... in B_n
  bool ridge_inclusion = false;       // (4) B_{n-2} in B_{n-1}
  bool b1_dimension = false;          // (5) dim B_1 = m - n + 1
  bool even_two_faces = false;        // every 2-face has an even vertex count
  int dim_b1 = 0;
  int m_minus_n_plus_1 = 0;
  std::optional<Coloring> coloring;
  bool verdict = false;
};

/// Evaluates the colorability criteria independently and checks that they agree.
inline ColorabilityReport colorability_report(const SimplePolytope& p) {
  ColorabilityReport r;
  const int n = p.dim();
  r.coloring = find_coloring(p);
  r.direct = r.coloring.has_value();
  r.verdict = r.direct;
  if (n < 3) {
    r.degenerate_dimension = true;
    return r;
  }
  r.partition = r.coloring && is_perfect_cover_partition(p, color_classes(p, *r.coloring));
  std::vector<gf2::LinearCode> codes;
  for (int k = 0; k <= n; ++k) codes.push_back(face_code(p, k).code);
  r.inclusion_chain = true;
  for (int k = 0; k < n; ++k) r.inclusion_chain = r.inclusion_chain && codes[static_cast<std::size_t>(k + 1)].contains(codes[static_cast<std::size_t>(k)]);
  r.ridge_inclusion = codes[static_cast<std::size_t>(n - 1)].contains(codes[static_cast<std::size_t>(n - 2)]);
  r.dim_b1 = codes[1].dim();
  r.m_minus_n_plus_1 = p.num_facets() - n + 1;
  r.b1_dimension = r.dim_b1 == r.m_minus_n_plus_1;
  r.even_two_faces = is_even(p);
  const bool all_agree = r.partition == r.direct && r.inclusion_chain == r.direct && r.ridge_inclusion == r.direct &&
                         r.b1_dimension == r.direct && r.even_two_faces == r.direct;
  expect_theorem(all_agree, "colorability criteria disagree on '" + p.name() + "'");
  expect_theorem(r.dim_b1 >= r.m_minus_n_plus_1, "dim B_1 below m-n+1 on '" + p.name() + "'");
  return r;
}

// ---------------------------------------------------------------------------
// Even polytopes: dimension law, duality, closure

inline void require_even(const SimplePolytope& p, const char* what) {
  require(is_even(p), ErrorKind::Inapplicable, std::string(what) + " needs an even polytope; '" + p.name() + "' is not");
}

struct DimensionRow {
  int k = 0;
  int dim = 0;
  std::int64_t h_sum = 0;  // h_0 + ... + h_k
  bool self_dual = false;
};

/// For an even polytope: dim B_k = h_0 + ... + h_k for every k, and B_k is
/// self-dual exactly for k = (n-1)/2 when n is odd (never when n is even).
inline std::vector<DimensionRow> dimension_law_check(const SimplePolytope& p) {
  require_even(p, "dimension law");
  const int n = p.dim();
  const auto fh = fh_vectors(p);
  std::vector<DimensionRow> rows;
  for (int k = 0; k <= n; ++k) {
    const auto code = face_code(p, k).code;
    DimensionRow row{k, code.dim(), h_prefix(fh, k), gf2::is_self_dual(code).self_dual};
    expect_theorem(row.dim == row.h_sum, "dim B_" + std::to_string(k) + " of '" + p.name() + "' is " +
                                             std::to_string(row.dim) + ", expected " + std::to_string(row.h_sum));
    const bool expected_self_dual = n % 2 == 1 && k == (n - 1) / 2;
    expect_theorem(row.self_dual == expected_self_dual,
                   "self-dual index mismatch at k=" + std::to_string(k) + " on '" + p.name() + "'");
    rows.push_back(row);
  }
  return rows;
}

/// For an even polytope: the dual of B_k is B_{n-1-k} for all 0 <= k <= n-1.
inline bool duality_complement_check(const SimplePolytope& p) {
  require_even(p, "duality check");
  const int n = p.dim();
  std::vector<gf2::LinearCode> codes;
  for (int k = 0; k < n; ++k) codes.push_back(face_code(p, k).code);
  for (int k = 0; k < n; ++k) {
    if (gf2::dual_code(codes[static_cast<std::size_t>(k)]) != codes[static_cast<std::size_t>(n - 1 - k)]) return false;
  }
  return true;
}

/// For an even polytope: products of k facet indicators span exactly B_k.
/// Repeated factors collapse (x o x = x), so all facet subsets of size 1..k are used.
inline bool circ_closure_check(const SimplePolytope& p, int k) {
  require_even(p, "circ closure");
  require(1 <= k && k <= p.dim(), ErrorKind::InvalidInput, "circ closure needs 1 <= k <= n");
  const auto nv = static_cast<std::size_t>(p.num_vertices());
  std::vector<BitVector> products;
  for (int s = 1; s <= k; ++s) {
    for_each_combination(p.num_facets(), s, [&](const std::vector<int>& idx) {
      BitVector x = BitVector::ones(nv);
      for (int f : idx) x = gf2::circ(x, p.facet_indicator(f));
      if (!x.is_zero()) products.push_back(std::move(x));
    });
  }
  const auto spanned = gf2::LinearCode::reduce(nv, products);
  const auto bk = face_code(p, k).code;
  return spanned.contains(bk) && bk.contains(spanned);
}

// ---------------------------------------------------------------------------
// Self-duality

struct SelfDualityReport {
  int k = 0;
  int dim = 0;
  int num_vertices = 0;
  bool cond_a = false;  // |V| even and dim B_k = |V| / 2
  bool cond_b = false;  // faces of codimension k..2k all have even vertex counts
  bool direct = false;  // B_k equals its dual
  bool ones_in_code = false;
  bool verdict = false;
};

inline SelfDualityReport self_duality_report(const SimplePolytope& p, int k) {
  SelfDualityReport r;
  r.k = k;
  const auto fc = face_code(p, k);
  r.dim = fc.code.dim();
  r.num_vertices = p.num_vertices();
  r.cond_a = r.num_vertices % 2 == 0 && 2 * r.dim == r.num_vertices;
  r.cond_b = true;
  for (int c = k; c <= std::min(2 * k, p.dim()) && r.cond_b; ++c) {
    for (const auto& f : faces_of_codim(p, c)) {
      if (f.size() % 2 != 0) {
        r.cond_b = false;
        break;
      }
    }
  }
  r.direct = gf2::is_self_dual(fc.code).self_dual;
  r.ones_in_code = fc.code.contains(BitVector::ones(static_cast<std::size_t>(r.num_vertices)));
  r.verdict = r.direct;
  expect_theorem((r.cond_a && r.cond_b) == r.direct,
                 "self-duality conditions (a),(b) disagree with the direct test on '" + p.name() + "', k=" +
                     std::to_string(k));
  if (r.direct && p.dim() >= 3) {
    expect_theorem(r.ones_in_code && 0 < 2 * k && 2 * k < p.dim(),
                   "self-dual face code violates 1 in B_k, 0 < 2k < n on '" + p.name() + "'");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Odd-dimensional even polytopes: minimum distance and doubly-even codes

struct MinDistanceBound {
  int k = 0;
  std::size_t bound = 0;  // fewest vertices on a codimension-k face
  std::size_t exact = 0;  // minimum distance of B_k
};

inline MinDistanceBound min_distance_bound_check(const SimplePolytope& p) {
  require(p.dim() % 2 == 1, ErrorKind::Inapplicable, "minimum-distance bound needs odd dimension");
  require_even(p, "minimum-distance bound");
  MinDistanceBound r;
  r.k = (p.dim() - 1) / 2;
  const auto fc = face_code(p, r.k);
  r.bound = static_cast<std::size_t>(p.num_vertices());
  for (const auto& f : fc.faces) r.bound = std::min(r.bound, f.size());
  r.exact = gf2::min_distance(fc.code);
  expect_theorem(r.exact <= r.bound, "minimum distance exceeds the smallest face on '" + p.name() + "'");
  if (p.dim() == 3) expect_theorem(r.exact == 4, "3-dimensional even polytope with minimum distance != 4");
  return r;
}

struct DoublyEvenReport {
  int k = 0;
  bool criterion = false;          // every codimension-k face has 0 mod 4 vertices
  bool code_doubly_even = false;   // computed on B_k
};

inline DoublyEvenReport doubly_even_report(const SimplePolytope& p) {
  require(p.dim() % 2 == 1, ErrorKind::Inapplicable, "doubly-even criterion needs odd dimension");
  require_even(p, "doubly-even criterion");
  DoublyEvenReport r;
  r.k = (p.dim() - 1) / 2;
  const auto fc = face_code(p, r.k);
  r.criterion = std::all_of(fc.faces.begin(), fc.faces.end(), [](const Face& f) { return f.size() % 4 == 0; });
  r.code_doubly_even = fc.code.dim() <= gf2::kEnumerationMaxDim ? gf2::weight_enumerator(fc.code).doubly_even
                                                                 : gf2::is_doubly_even(fc.code);
  expect_theorem(r.criterion == r.code_doubly_even, "doubly-even face criterion disagrees with the code on '" + p.name() + "'");
  return r;
}

/// B_k of the (2k+1)-cube equals RM(k, 2k+1) under the canonical cube labeling.
inline bool reed_muller_check(int k) {
  require(k >= 1, ErrorKind::InvalidInput, "reed_muller_check needs k >= 1");
  require(2 * k + 1 <= 5, ErrorKind::BudgetExceeded, "reed_muller_check is limited to cubes of dimension <= 5");
  const int m = 2 * k + 1;
  std::int64_t dim = 0;
  for (int i = 0; i <= k; ++i) dim += binomial(m, i);
  expect_theorem(dim == (std::int64_t{1} << (2 * k)), "Reed-Muller dimension identity");
  const auto bk = face_code(cube(m), k).code;
  const auto rm = gf2::reed_muller(k, m);
  return bk.dim() == dim && bk == rm;
}

}  // namespace facecode
