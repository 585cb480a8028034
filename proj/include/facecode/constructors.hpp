#pragma once

// Canonical polytope builders. Vertex and facet labelings are part of the
// contract: tests pin exact code matrices against them.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facecode/error.hpp"
#include "facecode/polytope.hpp"
#include "facecode/rational.hpp"

namespace facecode {

/// n+1 vertices; facet i is every vertex except i. Vertex 0 sits at the origin,
/// vertex i at the i-th standard basis vector.
inline SimplePolytope simplex(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "simplex needs n >= 1");
  RawPolytope raw;
  raw.dim = n;
  raw.name = "simplex " + std::to_string(n);
  raw.polytopality = Polytopality::Constructed;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> facet;
    for (int v = 0; v <= n; ++v) {
      if (v != i) facet.push_back(v);
    }
    raw.facets.push_back(std::move(facet));
  }
  std::vector<Point> coords;
  for (int v = 0; v <= n; ++v) {
    Point p(static_cast<std::size_t>(n), Rational(0));
    if (v > 0) p[static_cast<std::size_t>(v - 1)] = 1;
    coords.push_back(std::move(p));
  }
  raw.coords = std::move(coords);
  return validate(std::move(raw));
}

/// Vertices 0..m-1 in cyclic order; facet i = {i, i+1 mod m}. Realized on the
/// parabola y = x^2 at x = 0..m-1, which is in convex position.
inline SimplePolytope polygon(int m) {
  require(m >= 3, ErrorKind::InvalidInput, "polygon needs m >= 3");
  RawPolytope raw;
  raw.dim = 2;
  raw.name = "polygon " + std::to_string(m);
  raw.polytopality = Polytopality::Constructed;
  for (int i = 0; i < m; ++i) raw.facets.push_back({i, (i + 1) % m});
  std::vector<Point> coords;
  for (int i = 0; i < m; ++i) coords.push_back({Rational(i), Rational(i * i)});
  raw.coords = std::move(coords);
  return validate(std::move(raw));
}

/// Vertices are the points of {0,1}^n in counting order: vertex v has
/// coordinate j equal to bit j of v. Facet 2j is {x_j = 0}, facet 2j+1 is {x_j = 1}.
inline SimplePolytope cube(int n) {
  require(n >= 1 && n <= 20, ErrorKind::InvalidInput, "cube needs 1 <= n <= 20");
  RawPolytope raw;
  raw.dim = n;
  raw.name = "cube " + std::to_string(n);
  raw.polytopality = Polytopality::Constructed;
  const int nv = 1 << n;
  for (int j = 0; j < n; ++j) {
    for (int side = 0; side < 2; ++side) {
      std::vector<int> facet;
      for (int v = 0; v < nv; ++v) {
        if (((v >> j) & 1) == side) facet.push_back(v);
      }
      raw.facets.push_back(std::move(facet));
    }
  }
  std::vector<Point> coords;
  for (int v = 0; v < nv; ++v) {
    Point p;
    for (int j = 0; j < n; ++j) p.emplace_back((v >> j) & 1);
    coords.push_back(std::move(p));
  }
  raw.coords = std::move(coords);
  return validate(std::move(raw));
}

inline SimplePolytope segment() { return cube(1).with_name("segment"); }

/// Vertex (p, q) gets index p * |V(Q)| + q. Facets: F x V(Q) for each facet F
/// of P in order, then V(P) x G for each facet G of Q.
inline SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
  RawPolytope raw;
  raw.dim = p.dim() + q.dim();
  raw.name = "product (" + p.name() + ") (" + q.name() + ")";
  raw.polytopality = (p.polytopality() == Polytopality::Constructed && q.polytopality() == Polytopality::Constructed)
                         ? Polytopality::Constructed
                         : Polytopality::Unverified;
  const int nq = q.num_vertices();
  for (const auto& f : p.facets()) {
    std::vector<int> facet;
    for (int a : f) {
      for (int b = 0; b < nq; ++b) facet.push_back(a * nq + b);
    }
    raw.facets.push_back(std::move(facet));
  }
  for (const auto& g : q.facets()) {
    std::vector<int> facet;
    for (int a = 0; a < p.num_vertices(); ++a) {
      for (int b : g) facet.push_back(a * nq + b);
    }
    raw.facets.push_back(std::move(facet));
  }
  if (p.has_coords() && q.has_coords()) {
    std::vector<Point> coords;
    for (const auto& a : p.coords()) {
      for (const auto& b : q.coords()) {
        Point c = a;
        c.insert(c.end(), b.begin(), b.end());
        coords.push_back(std::move(c));
      }
    }
    raw.coords = std::move(coords);
  }
  return validate(std::move(raw));
}

/// polygon(m) x segment.
inline SimplePolytope prism(int m) { return product(polygon(m), segment()).with_name("prism " + std::to_string(m)); }

/// Truncates vertex v. The remaining vertices keep their order (indices above v
/// shift down by one); new vertices w_1..w_n are appended, w_j lying on the edge
/// that leaves the j-th facet of v. The new facet is appended last. A realized
/// input is cut by the hyperplane through the points 1/3 along each edge at v.
inline SimplePolytope vertex_cut(const SimplePolytope& p, int v) {
  require(0 <= v && v < p.num_vertices(), ErrorKind::InvalidInput,
          "vertex_cut: vertex " + std::to_string(v) + " out of range");
  const int n = p.dim();
  const auto& at_v = p.vertex_facets(v);
  const int first_new = p.num_vertices() - 1;
  auto renumber = [v](int u) { return u > v ? u - 1 : u; };

  RawPolytope raw;
  raw.dim = n;
  raw.name = "vcut (" + p.name() + ") " + std::to_string(v);
  raw.polytopality = p.polytopality();
  for (int f = 0; f < p.num_facets(); ++f) {
    std::vector<int> facet;
    for (int u : p.facet(f)) {
      if (u != v) facet.push_back(renumber(u));
    }
    const auto pos = std::find(at_v.begin(), at_v.end(), f);
    if (pos != at_v.end()) {
      const int k = static_cast<int>(pos - at_v.begin());
      for (int j = 0; j < n; ++j) {
        if (j != k) facet.push_back(first_new + j);
      }
    }
    raw.facets.push_back(std::move(facet));
  }
  std::vector<int> cut;
  for (int j = 0; j < n; ++j) cut.push_back(first_new + j);
  raw.facets.push_back(std::move(cut));

  if (p.has_coords()) {
    std::vector<Point> coords;
    for (int u = 0; u < p.num_vertices(); ++u) {
      if (u != v) coords.push_back(p.coords()[static_cast<std::size_t>(u)]);
    }
    const auto& pv = p.coords()[static_cast<std::size_t>(v)];
    for (int j = 0; j < n; ++j) {
      const auto& pu = p.coords()[static_cast<std::size_t>(p.neighbor_leaving(v, static_cast<std::size_t>(j)))];
      Point w(pv.size());
      for (std::size_t c = 0; c < pv.size(); ++c) w[c] = pv[c] + (pu[c] - pv[c]) / 3;
      coords.push_back(std::move(w));
    }
    raw.coords = std::move(coords);
  }
  return validate(std::move(raw));
}

/// The simple 5-polytope dual to the cyclic polytope C^5(7): 7 facets, 12
/// vertices, incidence hard-coded in the classical labeling F_1..F_7, v_1..v_12
/// (shifted to 0-based). No realization.
inline SimplePolytope dual_cyclic_5_7() {
  static constexpr int kVertexFacets[12][5] = {
      {1, 2, 3, 4, 5}, {1, 2, 3, 4, 7}, {1, 2, 3, 6, 7}, {1, 2, 5, 6, 7}, {1, 4, 5, 6, 7}, {3, 4, 5, 6, 7},
      {1, 3, 4, 5, 6}, {2, 3, 4, 5, 7}, {1, 2, 4, 5, 7}, {1, 3, 4, 6, 7}, {1, 2, 3, 5, 6}, {2, 3, 5, 6, 7},
  };
  RawPolytope raw;
  raw.dim = 5;
  raw.name = "dualcyclic57";
  raw.polytopality = Polytopality::Constructed;
  raw.facets.assign(7, {});
  for (int v = 0; v < 12; ++v) {
    for (int f : kVertexFacets[v]) raw.facets[static_cast<std::size_t>(f - 1)].push_back(v);
  }
  return validate(std::move(raw));
}

/// Expression tree over the canonical constructors.
struct Recipe {
  enum class Kind { Simplex, Polygon, Cube, Segment, Prism, Product, VertexCut, DualCyclic57 };

  Kind kind = Kind::Segment;
  int param = 0;
  std::vector<Recipe> children;

  std::string to_string() const {
    auto nested = [](const Recipe& r) {
      const bool bare = r.kind == Kind::Segment || r.kind == Kind::DualCyclic57;
      return bare ? r.to_string() : "(" + r.to_string() + ")";
    };
    switch (kind) {
      case Kind::Simplex: return "simplex " + std::to_string(param);
      case Kind::Polygon: return "polygon " + std::to_string(param);
      case Kind::Cube: return "cube " + std::to_string(param);
      case Kind::Segment: return "segment";
      case Kind::Prism: return "prism " + std::to_string(param);
      case Kind::Product: return "product " + nested(children[0]) + " " + nested(children[1]);
      case Kind::VertexCut: return "vcut " + nested(children[0]) + " " + std::to_string(param);
      case Kind::DualCyclic57: return "dualcyclic57";
    }
    return {};
  }

  SimplePolytope build() const {
    auto result = [&]() -> SimplePolytope {
      switch (kind) {
        case Kind::Simplex: return simplex(param);
        case Kind::Polygon: return polygon(param);
        case Kind::Cube: return cube(param);
        case Kind::Segment: return segment();
        case Kind::Prism: return prism(param);
        case Kind::Product: return product(children[0].build(), children[1].build());
        case Kind::VertexCut: return vertex_cut(children[0].build(), param);
        case Kind::DualCyclic57: return dual_cyclic_5_7();
      }
      fail(ErrorKind::InvalidInput, "unknown recipe kind");
    }();
    return result.with_name(to_string());
  }
};

namespace detail {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) tokens_.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : text) {
      if (c == '(' || c == ')') {
        flush();
        tokens_.emplace_back(1, c);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
  }

  Recipe parse() {
    Recipe r = expr();
    require(pos_ == tokens_.size(), ErrorKind::InvalidInput, "trailing tokens in recipe");
    return r;
  }

 private:
  const std::string& next() {
    require(pos_ < tokens_.size(), ErrorKind::InvalidInput, "recipe ends unexpectedly");
    return tokens_[pos_++];
  }

  int integer() {
    const auto& t = next();
    require(!t.empty() && t.size() < 9 && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
            ErrorKind::InvalidInput, "expected an integer in recipe, got '" + t + "'");
    return std::stoi(t);
  }

  Recipe expr() {
    const std::string head = next();
    if (head == "(") {
      Recipe r = expr();
      require(next() == ")", ErrorKind::InvalidInput, "expected ')' in recipe");
      return r;
    }
    using K = Recipe::Kind;
    Recipe r;
    if (head == "simplex") {
      r.kind = K::Simplex;
      r.param = integer();
    } else if (head == "polygon") {
      r.kind = K::Polygon;
      r.param = integer();
    } else if (head == "cube") {
      r.kind = K::Cube;
      r.param = integer();
    } else if (head == "segment") {
      r.kind = K::Segment;
    } else if (head == "prism") {
      r.kind = K::Prism;
      r.param = integer();
    } else if (head == "product") {
      r.kind = K::Product;
      r.children.push_back(expr());
      r.children.push_back(expr());
    } else if (head == "vcut") {
      r.kind = K::VertexCut;
      r.children.push_back(expr());
      r.param = integer();
    } else if (head == "dualcyclic57") {
      r.kind = K::DualCyclic57;
    } else {
      fail(ErrorKind::InvalidInput, "unknown recipe operator '" + head + "'");
    }
    return r;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "cube 3", "prism 8", "product (polygon 6) (cube 2)", "vcut (simplex 3) 0".
inline Recipe parse_recipe(std::string_view text) { return detail::RecipeParser(text).parse(); }

inline SimplePolytope build_recipe(std::string_view text) { return parse_recipe(text).build(); }

}  // namespace facecode
