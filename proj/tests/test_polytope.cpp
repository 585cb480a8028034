#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "facecode/constructors.hpp"
#include "facecode/polytope.hpp"

using namespace facecode;

namespace {

RawPolytope tetrahedron_raw() {
  RawPolytope raw;
  raw.dim = 3;
  raw.facets = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  return raw;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::TheoremViolation;
}

// Faces by intersecting every k-subset of facets, keeping the nonempty ones.
std::set<std::vector<std::size_t>> brute_faces(const SimplePolytope& p, int k) {
  std::set<std::vector<std::size_t>> out;
  for_each_combination(p.num_facets(), k, [&](const std::vector<int>& idx) {
    auto x = gf2::BitVector::ones(static_cast<std::size_t>(p.num_vertices()));
    for (int f : idx) x &= p.facet_indicator(f);
    if (!x.is_zero()) out.insert(x.support());
  });
  return out;
}

}  // namespace

TEST(Validate, Tetrahedron) {
  const auto p = validate(tetrahedron_raw());
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(p.num_vertices(), 4);
  EXPECT_EQ(p.num_facets(), 4);
  EXPECT_EQ(p.polytopality(), Polytopality::Unverified);
}

TEST(Validate, CubeWithVertexDroppedFromFacet) {
  auto raw = cube(3).raw();
  raw.facets[0].erase(raw.facets[0].begin());
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);
  const auto issues = incidence_violations(raw);
  ASSERT_FALSE(issues.empty());
  EXPECT_NE(issues.front().find("facets"), std::string::npos);
}

TEST(Validate, RejectsMalformedData) {
  auto raw = tetrahedron_raw();
  raw.facets.push_back({0, 1, 2});
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);  // duplicate facet

  raw = tetrahedron_raw();
  raw.facets[0] = {};
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);

  raw = tetrahedron_raw();
  raw.dim = 0;
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);

  raw = tetrahedron_raw();
  raw.facets[0] = {1, 2, -3};
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);

  // two disjoint segments: simple but disconnected
  raw = RawPolytope{};
  raw.dim = 1;
  raw.facets = {{0}, {1}, {2}, {3}};
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);

  raw = tetrahedron_raw();
  raw.coords = std::vector<Point>(3, Point(3));
  EXPECT_EQ(kind_of([&] { validate(raw); }), ErrorKind::InvalidPolytope);
}

TEST(Validate, PrismSix) {
  const auto p = prism(6);
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(p.num_facets(), 8);
  EXPECT_EQ(p.num_vertices(), 12);
}

TEST(Faces, CubeThree) {
  const auto c = cube(3);
  const auto f1 = faces_of_codim(c, 1);
  ASSERT_EQ(f1.size(), 6U);
  for (const auto& f : f1) EXPECT_EQ(f.size(), 4U);
  EXPECT_EQ(faces_of_codim(c, 2).size(), 12U);
  EXPECT_EQ(faces_of_codim(c, 3).size(), 8U);
  EXPECT_EQ(faces_of_codim(c, 0).size(), 1U);
  EXPECT_EQ(kind_of([&] { faces_of_codim(c, 4); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { faces_of_codim(c, -1); }), ErrorKind::InvalidInput);
}

TEST(Faces, MatchBruteForceIntersections) {
  for (const auto& p : {cube(3), prism(6), simplex(4), vertex_cut(cube(3), 2), dual_cyclic_5_7()}) {
    for (int k = 1; k <= p.dim(); ++k) {
      std::set<std::vector<std::size_t>> got;
      const auto faces = faces_of_codim(p, k);
      for (const auto& f : faces) {
        EXPECT_EQ(static_cast<int>(f.defining_facets.size()), k);
        got.insert(f.vertices.support());
      }
      EXPECT_EQ(got, brute_faces(p, k)) << p.name() << " k=" << k;
      EXPECT_EQ(got.size(), faces.size());
      EXPECT_TRUE(std::is_sorted(faces.begin(), faces.end(),
                                 [](const Face& a, const Face& b) { return a.defining_facets < b.defining_facets; }));
    }
  }
}

TEST(Faces, FacetsAreTheInput) {
  const auto p = prism(5);
  const auto f1 = faces_of_codim(p, 1);
  ASSERT_EQ(static_cast<int>(f1.size()), p.num_facets());
  for (int f = 0; f < p.num_facets(); ++f) EXPECT_EQ(f1[static_cast<std::size_t>(f)].vertices, p.facet_indicator(f));
}

TEST(Faces, PrismSixFacetSizes) {
  std::multiset<std::size_t> sizes;
  for (const auto& f : faces_of_codim(prism(6), 1)) sizes.insert(f.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{4, 4, 4, 4, 4, 4, 6, 6}));
}

TEST(Xi, Examples) {
  const auto c = cube(3);
  EXPECT_EQ(xi(c, faces_of_codim(c, 0).front()), gf2::BitVector::ones(8));
  for (const auto& f : faces_of_codim(c, 3)) {
    ASSERT_EQ(f.size(), 1U);
    EXPECT_EQ(xi(c, f), gf2::BitVector::unit(8, f.vertices.first_set()));
  }
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      const auto prod = gf2::circ(c.facet_indicator(a), c.facet_indicator(b));
      std::set<int> inter;
      std::set_intersection(c.facet(a).begin(), c.facet(a).end(), c.facet(b).begin(), c.facet(b).end(),
                            std::inserter(inter, inter.end()));
      EXPECT_EQ(prod, gf2::BitVector::from_indices(8, inter));
    }
  }
}

TEST(FH, Examples) {
  const auto c = fh_vectors(cube(3));
  EXPECT_EQ(c.g, (std::vector<std::int64_t>{1, 6, 12, 8}));
  EXPECT_EQ(c.h, (std::vector<std::int64_t>{1, 3, 3, 1}));
  const auto s = fh_vectors(simplex(3));
  EXPECT_EQ(s.g, (std::vector<std::int64_t>{1, 4, 6, 4}));
  EXPECT_EQ(s.h, (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_EQ(fh_vectors(dual_cyclic_5_7()).h, (std::vector<std::int64_t>{1, 2, 3, 3, 2, 1}));
}

TEST(FH, TransformMatchesPolynomialExpansion) {
  // Expand sum g_i (t-1)^(n-i) coefficient by coefficient.
  for (const auto& p : {cube(4), prism(7), simplex(5), vertex_cut(simplex(4), 1)}) {
    const auto fh = fh_vectors(p);
    const int n = p.dim();
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n + 1), 0);  // poly[j] = coefficient of t^(n-j)
    for (int i = 0; i <= n; ++i) {
      std::vector<std::int64_t> f{1};  // (t-1)^(n-i), highest degree first
      for (int e = 0; e < n - i; ++e) {
        std::vector<std::int64_t> next(f.size() + 1, 0);
        for (std::size_t a = 0; a < f.size(); ++a) {
          next[a] += f[a];
          next[a + 1] -= f[a];
        }
        f = next;
      }
      for (std::size_t a = 0; a < f.size(); ++a) poly[static_cast<std::size_t>(i) + a] += fh.g[static_cast<std::size_t>(i)] * f[a];
    }
    EXPECT_EQ(poly, fh.h) << p.name();
  }
}

TEST(FH, PolygonAndPolytopality) {
  EXPECT_EQ(h_from_g({1, 6, 6}), (std::vector<std::int64_t>{1, 4, 1}));
  EXPECT_EQ(fh_vectors(polygon(6)).h, (std::vector<std::int64_t>{1, 4, 1}));
  EXPECT_EQ(cube(3).polytopality(), Polytopality::Constructed);
  EXPECT_EQ(validate(cube(3).raw()).polytopality(), Polytopality::Constructed);
  auto raw = cube(3).raw();
  raw.polytopality = Polytopality::Unverified;
  EXPECT_EQ(validate(raw).polytopality(), Polytopality::Unverified);
}

TEST(Edges, Examples) {
  const auto c = cube(3);
  const auto e = edges(c);
  EXPECT_EQ(e.size(), 12U);
  std::map<int, int> degree;
  for (const auto& [u, w] : e) {
    ++degree[u];
    ++degree[w];
  }
  for (const auto& [v, d] : degree) EXPECT_EQ(d, 3);

  const auto pe = edges(polygon(5));
  EXPECT_EQ(pe, (std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(edges(prism(6)).size(), faces_of_codim(prism(6), 2).size());
  EXPECT_EQ(edges(prism(6)).size(), 18U);
}

TEST(Edges, MatchRidgeFaces) {
  for (const auto& p : {prism(5), simplex(4), dual_cyclic_5_7()}) {
    std::set<std::vector<std::size_t>> from_edges, from_faces;
    for (const auto& [u, w] : edges(p)) from_edges.insert({static_cast<std::size_t>(u), static_cast<std::size_t>(w)});
    for (const auto& f : faces_of_codim(p, p.dim() - 1)) from_faces.insert(f.vertices.support());
    EXPECT_EQ(from_edges, from_faces);
  }
}

TEST(XiMap, CubeFacetMapsOntoOpposite) {
  const auto c = cube(3);
  for (int f = 0; f < 6; ++f) {
    const auto m = xi_map(c, f);
    EXPECT_TRUE(m.injective);
    EXPECT_TRUE(m.onto_complement);
    const int opposite = f ^ 1;
    for (const auto& [v, w] : m.image) EXPECT_TRUE(std::binary_search(c.facet(opposite).begin(), c.facet(opposite).end(), w));
  }
}

TEST(XiMap, SimplexIsNotInjective) {
  const auto s = simplex(3);
  for (int f = 0; f < 4; ++f) {
    const auto m = xi_map(s, f);
    EXPECT_FALSE(m.injective);
    std::set<int> targets;
    for (const auto& [v, w] : m.image) targets.insert(w);
    EXPECT_EQ(targets, std::set<int>{f});  // facet f misses exactly vertex f
  }
}

TEST(XiMap, PrismSixUnderFigureLabeling) {
  // Figure labels 1..6 run around one hexagon, 7..12 around the other with
  // label L+6 above L. Canonical prism labels are 2a + b for hexagon vertex a
  // and level b.
  auto canonical = [](int label) { return label <= 6 ? 2 * (label - 1) : 2 * (label - 7) + 1; };
  const auto p = prism(6);
  std::vector<int> square;
  for (int label : {3, 4, 9, 10}) square.push_back(canonical(label));
  std::sort(square.begin(), square.end());
  int facet = -1;
  for (int f = 0; f < p.num_facets(); ++f) {
    if (p.facet(f) == square) facet = f;
  }
  ASSERT_GE(facet, 0);
  const auto m = xi_map(p, facet);
  const std::map<int, int> expected_labels{{3, 2}, {4, 5}, {9, 8}, {10, 11}};
  std::map<int, int> expected;
  for (const auto& [a, b] : expected_labels) expected[canonical(a)] = canonical(b);
  EXPECT_EQ(m.image, expected);
  EXPECT_TRUE(m.injective);
  EXPECT_FALSE(m.onto_complement);
}

TEST(Even, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_even(cube(n)));
  EXPECT_FALSE(is_even(simplex(3)));
  EXPECT_FALSE(is_even(dual_cyclic_5_7()));
  EXPECT_TRUE(is_even(polygon(6)));
  EXPECT_FALSE(is_even(polygon(5)));
  EXPECT_TRUE(is_even(prism(6)));
  EXPECT_FALSE(is_even(prism(5)));
}

TEST(Skeleton, BalinskiForThreePolytopes) {
  for (const auto& p : {cube(3), prism(7), vertex_cut(simplex(3), 0)}) {
    EXPECT_TRUE(skeleton_connected(p));
    for (int a = 0; a < p.num_vertices(); ++a) {
      for (int b = a + 1; b < p.num_vertices(); ++b) EXPECT_TRUE(skeleton_connected(p, {a, b}));
    }
  }
  // removing the three neighbors of a cube vertex isolates it
  const auto c = cube(3);
  EXPECT_FALSE(skeleton_connected(c, c.neighbors(0)));
}

TEST(Equivalence, RecognizesRelabelings) {
  EXPECT_TRUE(combinatorially_equivalent(polygon(4), cube(2)));
  EXPECT_TRUE(combinatorially_equivalent(polygon(3), simplex(2)));
  EXPECT_TRUE(combinatorially_equivalent(prism(4), cube(3)));
  EXPECT_TRUE(combinatorially_equivalent(vertex_cut(simplex(3), 2), prism(3)));
  EXPECT_FALSE(combinatorially_equivalent(prism(4), vertex_cut(simplex(3), 0)));
  EXPECT_FALSE(combinatorially_equivalent(cube(3), simplex(3)));
}
