#pragma once

// Generic linear height functions on realized polytopes. Orienting every edge
// upward, the number of vertices with j incoming edges is h_j, and the faces
// spanned by outgoing edges at low-index vertices give independent words of B_k.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "facecode/error.hpp"
#include "facecode/facecodes.hpp"
#include "facecode/gf2.hpp"
#include "facecode/polytope.hpp"
#include "facecode/rational.hpp"

namespace facecode {

struct HeightFunction {
  std::vector<Rational> objective;
  std::vector<Rational> values;  // per vertex, pairwise distinct
};

inline HeightFunction height_from_objective(const SimplePolytope& p, std::vector<Rational> objective) {
  const auto& coords = p.coords();
  require(static_cast<int>(objective.size()) == p.dim(), ErrorKind::InvalidInput, "objective has the wrong length");
  HeightFunction h;
  h.objective = std::move(objective);
  for (const auto& point : coords) {
    Rational value = 0;
    for (std::size_t j = 0; j < point.size(); ++j) value += h.objective[j] * point[j];
    h.values.push_back(std::move(value));
  }
  std::vector<Rational> sorted = h.values;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::GenericityFailure,
          "height function takes equal values on two vertices of '" + p.name() + "'");
  return h;
}

/// Draws integer objectives from a seeded mt19937_64 until the vertex values are
/// pairwise distinct: up to 100 draws, the coefficient range doubling after each.
inline HeightFunction generic_height(const SimplePolytope& p, std::uint64_t seed) {
  require(p.has_coords(), ErrorKind::Unrealized, "polytope '" + p.name() + "' has no coordinates");
  std::mt19937_64 rng(seed);
  std::int64_t range = 16;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> objective;
    for (int j = 0; j < p.dim(); ++j) {
      // Reduce the raw engine output directly; distribution objects are not portable.
      const auto span = static_cast<std::uint64_t>(2 * range + 1);
      objective.emplace_back(static_cast<std::int64_t>(rng() % span) - range);
    }
    try {
      return height_from_objective(p, std::move(objective));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GenericityFailure) throw;
    }
    range = std::min<std::int64_t>(range * 2, std::int64_t{1} << 40);
  }
  fail(ErrorKind::GenericityFailure, "no generic height function found for '" + p.name() + "' after 100 draws");
}

/// ind(v): the number of edge neighbors below v.
inline std::vector<int> vertex_indices(const SimplePolytope& p, const HeightFunction& phi) {
  std::vector<int> index(static_cast<std::size_t>(p.num_vertices()), 0);
  for (int v = 0; v < p.num_vertices(); ++v) {
    for (int w : p.neighbors(v)) {
      if (phi.values[static_cast<std::size_t>(w)] < phi.values[static_cast<std::size_t>(v)]) ++index[static_cast<std::size_t>(v)];
    }
  }
  return index;
}

inline std::vector<std::int64_t> index_histogram(const SimplePolytope& p, const HeightFunction& phi) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(p.dim() + 1), 0);
  for (int i : vertex_indices(p, phi)) ++hist[static_cast<std::size_t>(i)];
  return hist;
}

struct BasisExtraction {
  int k = 0;
  std::vector<std::pair<int, Face>> selected;  // (bottom vertex, face)
  int code_dim = 0;                            // dim B_k
  bool spans = false;                          // the selection is a basis of B_k
};

/// For every vertex v with ind(v) <= k, picks the codimension-k face spanned by
/// the n-k outgoing edges at v with the smallest neighbor indices. The faces'
/// indicators are independent in B_k; on even polytopes they form a basis.
inline BasisExtraction extract_basis(const SimplePolytope& p, const HeightFunction& phi, int k) {
  const int n = p.dim();
  require(0 <= k && k <= n, ErrorKind::InvalidInput, "codimension out of range");
  const auto nv = static_cast<std::size_t>(p.num_vertices());
  const auto index = vertex_indices(p, phi);
  BasisExtraction out;
  out.k = k;
  for (int v = 0; v < p.num_vertices(); ++v) {
    if (index[static_cast<std::size_t>(v)] > k) continue;
    const auto& fs = p.vertex_facets(v);
    std::vector<std::pair<int, int>> outgoing;  // (neighbor, facet the edge leaves)
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const int w = p.neighbor_leaving(v, i);
      if (phi.values[static_cast<std::size_t>(w)] > phi.values[static_cast<std::size_t>(v)]) outgoing.emplace_back(w, fs[i]);
    }
    std::sort(outgoing.begin(), outgoing.end());
    outgoing.resize(static_cast<std::size_t>(n - k));
    std::set<int> left;
    for (const auto& e : outgoing) left.insert(e.second);
    std::vector<int> defining;
    for (int f : fs) {
      if (!left.count(f)) defining.push_back(f);
    }
    Face face = face_from_facets(p, defining);
    for (auto u : face.vertices.support()) {
      expect_theorem(u == static_cast<std::size_t>(v) || phi.values[u] > phi.values[static_cast<std::size_t>(v)],
                     "selected face does not have its seed vertex as unique minimum");
    }
    out.selected.emplace_back(v, std::move(face));
  }
  std::vector<BitVector> words;
  for (const auto& s : out.selected) words.push_back(s.second.vertices);
  const auto spanned = gf2::LinearCode::reduce(nv, words);
  expect_theorem(spanned.dim() == static_cast<int>(words.size()),
                 "faces selected by the height function are linearly dependent on '" + p.name() + "'");
  const auto bk = face_code(p, k).code;
  expect_theorem(bk.contains(spanned), "selected faces are not in B_k");
  out.code_dim = bk.dim();
  out.spans = spanned.dim() == bk.dim();
  if (is_even(p)) expect_theorem(out.spans, "selected faces do not span B_k on the even polytope '" + p.name() + "'");
  return out;
}

}  // namespace facecode
