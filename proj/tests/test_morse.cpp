#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>

#include "facecode/constructors.hpp"
#include "facecode/corpus.hpp"
#include "facecode/morse.hpp"

using namespace facecode;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::TheoremViolation;
}

}  // namespace

TEST(Height, CubeBinaryObjective) {
  const auto c = cube(3);
  const auto phi = height_from_objective(c, {1, 2, 4});
  for (int v = 0; v < 8; ++v) EXPECT_EQ(phi.values[static_cast<std::size_t>(v)], Rational(v));
  const auto idx = vertex_indices(c, phi);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(idx[static_cast<std::size_t>(v)], std::popcount(static_cast<unsigned>(v)));
  EXPECT_EQ(index_histogram(c, phi), (std::vector<std::int64_t>{1, 3, 3, 1}));
}

TEST(Height, GenericSamples) {
  EXPECT_NO_THROW(generic_height(polygon(4), 0));
  const auto s = simplex(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(index_histogram(s, generic_height(s, seed)), (std::vector<std::int64_t>{1, 1, 1, 1}));
  }
  const auto p = prism(6);
  EXPECT_EQ(index_histogram(p, generic_height(p, 3)), (std::vector<std::int64_t>{1, 5, 5, 1}));
}

TEST(Height, Deterministic) {
  const auto p = prism(7);
  EXPECT_EQ(generic_height(p, 42).objective, generic_height(p, 42).objective);
}

TEST(Height, Errors) {
  EXPECT_EQ(kind_of([] { generic_height(dual_cyclic_5_7(), 0); }), ErrorKind::Unrealized);
  // Two vertices at the same point: no objective separates them.
  auto raw = cube(2).raw();
  (*raw.coords)[1] = (*raw.coords)[0];
  const auto degenerate = validate(raw);
  EXPECT_EQ(kind_of([&] { generic_height(degenerate, 0); }), ErrorKind::GenericityFailure);
  EXPECT_EQ(kind_of([] { height_from_objective(cube(3), {1, 1, 0}); }), ErrorKind::GenericityFailure);
}

TEST(Basis, CubeThree) {
  const auto c = cube(3);
  const auto phi = height_from_objective(c, {1, 2, 4});
  const auto b = extract_basis(c, phi, 1);
  EXPECT_EQ(b.selected.size(), 4U);
  EXPECT_EQ(b.code_dim, 4);
  EXPECT_TRUE(b.spans);
}

TEST(Basis, CodimensionZeroIsTheWholePolytope) {
  for (const auto& p : {cube(3), simplex(4), prism(5)}) {
    const auto phi = generic_height(p, 1);
    const auto b = extract_basis(p, phi, 0);
    ASSERT_EQ(b.selected.size(), 1U);
    const int bottom = static_cast<int>(std::min_element(phi.values.begin(), phi.values.end()) - phi.values.begin());
    EXPECT_EQ(b.selected.front().first, bottom);
    EXPECT_EQ(b.selected.front().second.size(), static_cast<std::size_t>(p.num_vertices()));
  }
}

TEST(Basis, SimplexIsNotSpanning) {
  const auto s = simplex(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto b = extract_basis(s, generic_height(s, seed), 1);
    EXPECT_EQ(b.selected.size(), 2U);
    EXPECT_EQ(b.code_dim, 4);
    EXPECT_FALSE(b.spans);
  }
}

TEST(Basis, SeedVertexIsTheUniqueMinimum) {
  for (const auto& p : {prism(6), vertex_cut(cube(3), 4), product(simplex(2), cube(2))}) {
    const auto phi = generic_height(p, 9);
    for (int k = 0; k <= p.dim(); ++k) {
      for (const auto& [v, f] : extract_basis(p, phi, k).selected) {
        EXPECT_EQ(static_cast<int>(f.defining_facets.size()), k);
        for (auto u : f.vertices.support()) {
          if (static_cast<int>(u) != v) { EXPECT_GT(phi.values[u], phi.values[static_cast<std::size_t>(v)]); }
        }
      }
    }
  }
}

TEST(Basis, CardinalityIsHPrefix) {
  for (const auto& p : corpus()) {
    if (!p.has_coords()) continue;
    const auto fh = fh_vectors(p);
    const auto phi = generic_height(p, 5);
    EXPECT_EQ(index_histogram(p, phi), fh.h) << p.name();
    for (int k = 0; k <= p.dim(); ++k) {
      EXPECT_EQ(static_cast<std::int64_t>(extract_basis(p, phi, k).selected.size()), h_prefix(fh, k)) << p.name();
    }
  }
}
