#pragma once

// Combinatorial model of a simple n-polytope given by vertex-facet incidence.
//
// A simple polytope is fully described by the vertex sets of its facets; every
// other face is an intersection of facets. Faces are keyed by the sorted set of
// facets that define them, which is unique because a codimension-k face of a
// simple polytope lies in exactly k facets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facecode/combinatorics.hpp"
#include "facecode/error.hpp"
#include "facecode/gf2.hpp"
#include "facecode/rational.hpp"

namespace facecode {

using gf2::BitVector;

enum class Polytopality {
  Constructed,  // built by a constructor from a known polytope
  Unverified,   // passed the local checks only
};

/// Incidence data as read from a file or produced by a constructor.
struct RawPolytope {
  int dim = 0;
  std::vector<std::vector<int>> facets;
  std::optional<std::vector<Point>> coords;
  std::string name;
  Polytopality polytopality = Polytopality::Unverified;
};

class SimplePolytope;
SimplePolytope validate(RawPolytope raw);

class SimplePolytope {
 public:
  int dim() const noexcept { return dim_; }
  int num_facets() const noexcept { return static_cast<int>(facets_.size()); }
  int num_vertices() const noexcept { return num_vertices_; }
  const std::string& name() const noexcept { return name_; }
  Polytopality polytopality() const noexcept { return polytopality_; }

  /// Sorted vertex indices of facet f.
  const std::vector<int>& facet(int f) const { return facets_.at(static_cast<std::size_t>(f)); }
  const std::vector<std::vector<int>>& facets() const noexcept { return facets_; }
  const BitVector& facet_indicator(int f) const { return facet_indicators_.at(static_cast<std::size_t>(f)); }

  /// Sorted indices of the n facets containing vertex v.
  const std::vector<int>& vertex_facets(int v) const { return vertex_facets_.at(static_cast<std::size_t>(v)); }

  /// The neighbor of v along the edge that leaves the i-th facet of vertex_facets(v).
  int neighbor_leaving(int v, std::size_t i) const { return leaving_.at(static_cast<std::size_t>(v)).at(i); }

  /// Edge neighbors of v, sorted.
  std::vector<int> neighbors(int v) const {
    auto out = leaving_.at(static_cast<std::size_t>(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_coords() const noexcept { return coords_.has_value(); }
  const std::vector<Point>& coords() const {
    require(coords_.has_value(), ErrorKind::Unrealized, "polytope '" + name_ + "' has no coordinates");
    return *coords_;
  }

  SimplePolytope with_name(std::string name) const {
    auto copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  RawPolytope raw() const { return RawPolytope{dim_, facets_, coords_, name_, polytopality_}; }

 private:
  friend SimplePolytope validate(RawPolytope raw);
  SimplePolytope() = default;

  int dim_ = 0;
  int num_vertices_ = 0;
  std::vector<std::vector<int>> facets_;
  std::vector<BitVector> facet_indicators_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<std::vector<int>> leaving_;
  std::optional<std::vector<Point>> coords_;
  std::string name_;
  Polytopality polytopality_ = Polytopality::Unverified;
};

/// Lists every violated local condition; empty means the data is simple polytopal data.
/// Full polytopality is not certified.
inline std::vector<std::string> incidence_violations(const RawPolytope& raw) {
  std::vector<std::string> issues;
  const int n = raw.dim;
  if (n < 1) {
    issues.push_back("dimension must be at least 1");
    return issues;
  }
  if (raw.facets.empty()) {
    issues.push_back("no facets");
    return issues;
  }
  int max_index = -1;
  for (std::size_t f = 0; f < raw.facets.size(); ++f) {
    if (raw.facets[f].empty()) issues.push_back("facet " + std::to_string(f) + " is empty");
    for (int v : raw.facets[f]) {
      if (v < 0) issues.push_back("facet " + std::to_string(f) + " has a negative vertex index");
      max_index = std::max(max_index, v);
    }
  }
  if (!issues.empty()) return issues;
  const int m = static_cast<int>(raw.facets.size());
  const int num_vertices = max_index + 1;
  if (m < n + 1) issues.push_back("need at least n+1 = " + std::to_string(n + 1) + " facets, got " + std::to_string(m));

  std::vector<std::vector<int>> vf(static_cast<std::size_t>(num_vertices));
  for (int f = 0; f < m; ++f) {
    std::set<int> seen;
    for (int v : raw.facets[static_cast<std::size_t>(f)]) {
      if (!seen.insert(v).second) {
        issues.push_back("facet " + std::to_string(f) + " lists vertex " + std::to_string(v) + " twice");
        continue;
      }
      vf[static_cast<std::size_t>(v)].push_back(f);
    }
  }
  {
    std::set<std::vector<int>> distinct;
    for (auto facet : raw.facets) {
      std::sort(facet.begin(), facet.end());
      if (!distinct.insert(facet).second) issues.push_back("two facets have the same vertex set");
    }
  }
  for (int v = 0; v < num_vertices; ++v) {
    const auto& fs = vf[static_cast<std::size_t>(v)];
    if (fs.empty()) {
      issues.push_back("vertex " + std::to_string(v) + " lies in no facet");
    } else if (static_cast<int>(fs.size()) != n) {
      issues.push_back("vertex " + std::to_string(v) + " lies in " + std::to_string(fs.size()) + " facets, expected " +
                       std::to_string(n));
    }
  }
  if (!issues.empty()) return issues;

  std::map<std::vector<int>, int> by_facets;
  for (int v = 0; v < num_vertices; ++v) {
    auto [it, fresh] = by_facets.emplace(vf[static_cast<std::size_t>(v)], v);
    if (!fresh) {
      issues.push_back("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                       " have the same facet set");
    }
  }

  // Each (n-1)-subset of a vertex's facets must be shared with exactly one other vertex.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_vertices));
  for (int v = 0; v < num_vertices; ++v) {
    const auto& fs = vf[static_cast<std::size_t>(v)];
    for (int skip = 0; skip < n; ++skip) {
      int count = 0;
      for (int w = 0; w < num_vertices; ++w) {
        if (w == v) continue;
        const auto& gs = vf[static_cast<std::size_t>(w)];
        bool all = true;
        for (int i = 0; i < n && all; ++i) {
          if (i == skip) continue;
          all = std::binary_search(gs.begin(), gs.end(), fs[static_cast<std::size_t>(i)]);
        }
        if (all) {
          ++count;
          adj[static_cast<std::size_t>(v)].push_back(w);
        }
      }
      if (count != 1) {
        issues.push_back("vertex " + std::to_string(v) + " has " + std::to_string(count) +
                         " neighbors along the edge leaving facet " + std::to_string(fs[static_cast<std::size_t>(skip)]) +
                         ", expected 1");
      }
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(num_vertices), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != num_vertices) issues.push_back("the 1-skeleton is disconnected");

  if (raw.coords) {
    if (static_cast<int>(raw.coords->size()) != num_vertices) {
      issues.push_back("coords has " + std::to_string(raw.coords->size()) + " points for " +
                       std::to_string(num_vertices) + " vertices");
    }
    for (const auto& p : *raw.coords) {
      if (static_cast<int>(p.size()) != n) {
        issues.push_back("a coordinate vector has length " + std::to_string(p.size()) + ", expected " +
                         std::to_string(n));
        break;
      }
    }
  }
  return issues;
}

/// Checks the local simplicity conditions and builds the derived incidence data.
inline SimplePolytope validate(RawPolytope raw) {
  const auto issues = incidence_violations(raw);
  if (!issues.empty()) {
    std::string msg;
    for (const auto& s : issues) msg += (msg.empty() ? "" : "; ") + s;
    fail(ErrorKind::InvalidPolytope, msg);
  }
  SimplePolytope p;
  p.dim_ = raw.dim;
  p.name_ = std::move(raw.name);
  p.polytopality_ = raw.polytopality;
  p.coords_ = std::move(raw.coords);
  p.facets_ = std::move(raw.facets);
  int max_index = 0;
  for (auto& f : p.facets_) {
    std::sort(f.begin(), f.end());
    max_index = std::max(max_index, f.back());
  }
  p.num_vertices_ = max_index + 1;
  const auto nv = static_cast<std::size_t>(p.num_vertices_);
  p.vertex_facets_.assign(nv, {});
  for (int f = 0; f < p.num_facets(); ++f) {
    p.facet_indicators_.push_back(BitVector::from_indices(nv, p.facets_[static_cast<std::size_t>(f)]));
    for (int v : p.facets_[static_cast<std::size_t>(f)]) p.vertex_facets_[static_cast<std::size_t>(v)].push_back(f);
  }
  // Intersecting the indicators of all but one facet of v gives an edge {v, w}.
  p.leaving_.assign(nv, {});
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& fs = p.vertex_facets_[v];
    for (std::size_t skip = 0; skip < fs.size(); ++skip) {
      BitVector edge = BitVector::ones(nv);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i != skip) edge &= p.facet_indicators_[static_cast<std::size_t>(fs[i])];
      }
      edge.set(v, false);
      p.leaving_[v].push_back(static_cast<int>(edge.first_set()));
    }
  }
  return p;
}

/// A face of codimension k: the intersection of k facets.
struct Face {
  int codim = 0;
  std::vector<int> defining_facets;
  BitVector vertices;

  std::size_t size() const noexcept { return vertices.weight(); }
};

/// All faces of codimension k, sorted lexicographically by defining facet set.
inline std::vector<Face> faces_of_codim(const SimplePolytope& p, int k) {
  require(0 <= k && k <= p.dim(), ErrorKind::InvalidInput,
          "codimension " + std::to_string(k) + " outside 0.." + std::to_string(p.dim()));
  const auto nv = static_cast<std::size_t>(p.num_vertices());
  if (k == 0) return {Face{0, {}, BitVector::ones(nv)}};
  std::set<std::vector<int>> keys;
  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto& fs = p.vertex_facets(v);
    for_each_combination(p.dim(), k, [&](const std::vector<int>& idx) {
      std::vector<int> key;
      key.reserve(idx.size());
      for (int i : idx) key.push_back(fs[static_cast<std::size_t>(i)]);
      keys.insert(std::move(key));
    });
  }
  std::vector<Face> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    BitVector verts = BitVector::ones(nv);
    for (int f : key) verts &= p.facet_indicator(f);
    out.push_back(Face{k, key, std::move(verts)});
  }
  return out;
}

/// The face cut out by a set of facets (empty vertex set if they do not meet).
inline Face face_from_facets(const SimplePolytope& p, std::vector<int> facets) {
  std::sort(facets.begin(), facets.end());
  BitVector verts = BitVector::ones(static_cast<std::size_t>(p.num_vertices()));
  for (int f : facets) verts &= p.facet_indicator(f);
  return Face{static_cast<int>(facets.size()), std::move(facets), std::move(verts)};
}

/// Vertex indicator of a face, of length |V(P)|.
inline BitVector xi(const SimplePolytope& p, const Face& f) {
  require(f.vertices.size() == static_cast<std::size_t>(p.num_vertices()), ErrorKind::InvalidInput,
          "face does not belong to this polytope");
  return f.vertices;
}

/// g_i counts faces of codimension i (g_0 = 1); h is the standard transform.
struct FHVectors {
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> h;
};

/// Expands sum_i g_i (t-1)^(n-i) = sum_i h_i t^(n-i) in exact integers.
inline std::vector<std::int64_t> h_from_g(const std::vector<std::int64_t>& g) {
  const int n = static_cast<int>(g.size()) - 1;
  std::vector<std::int64_t> h(g.size(), 0);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const std::int64_t sign = ((j - i) % 2 == 0) ? 1 : -1;
      h[static_cast<std::size_t>(j)] += sign * binomial(n - i, j - i) * g[static_cast<std::size_t>(i)];
    }
  }
  return h;
}

inline FHVectors fh_vectors(const SimplePolytope& p) {
  const int n = p.dim();
  FHVectors out;
  for (int k = 0; k <= n; ++k) out.g.push_back(static_cast<std::int64_t>(faces_of_codim(p, k).size()));
  out.h = h_from_g(out.g);
  const auto& h = out.h;
  bool ok = std::accumulate(h.begin(), h.end(), std::int64_t{0}) == p.num_vertices() && h[0] == 1 &&
            h[1] == p.num_facets() - n;
  for (int i = 0; i <= n; ++i) ok = ok && h[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(n - i)];
  if (!ok) {
    const std::string what = "h-vector of '" + p.name() + "' violates Dehn-Sommerville or its boundary values";
    if (p.polytopality() == Polytopality::Unverified) fail(ErrorKind::InvalidPolytope, what + " (input is not polytopal)");
    expect_theorem(false, what);
  }
  return out;
}

/// Vertex pairs (u < w) sharing exactly n-1 facets, sorted.
inline std::vector<std::pair<int, int>> edges(const SimplePolytope& p) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < p.num_vertices(); ++v) {
    for (int w : p.neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Connectivity of the 1-skeleton after deleting the vertices in `removed`.
inline bool skeleton_connected(const SimplePolytope& p, const std::vector<int>& removed = {}) {
  std::vector<bool> gone(static_cast<std::size_t>(p.num_vertices()), false);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = true;
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < p.num_vertices(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<bool> seen = gone;
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : p.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

/// The map sending each vertex of facet F to its edge-neighbor outside F.
struct XiMap {
  std::map<int, int> image;
  bool injective = false;
  bool onto_complement = false;  // image is exactly V(P) \ V(F)
};

inline XiMap xi_map(const SimplePolytope& p, int facet) {
  require(0 <= facet && facet < p.num_facets(), ErrorKind::InvalidInput, "facet index out of range");
  XiMap out;
  for (int v : p.facet(facet)) {
    const auto& fs = p.vertex_facets(v);
    const auto pos = static_cast<std::size_t>(std::find(fs.begin(), fs.end(), facet) - fs.begin());
    out.image[v] = p.neighbor_leaving(v, pos);
  }
  std::set<int> targets;
  for (const auto& [v, w] : out.image) targets.insert(w);
  out.injective = targets.size() == out.image.size();
  std::set<int> complement;
  const auto& fv = p.facet(facet);
  for (int v = 0; v < p.num_vertices(); ++v) {
    if (!std::binary_search(fv.begin(), fv.end(), v)) complement.insert(v);
  }
  out.onto_complement = targets == complement;
  return out;
}

/// Even (n-colorable) test through face parity: all 2-faces have an even vertex count.
inline bool is_even(const SimplePolytope& p) {
  const int n = p.dim();
  if (n == 1) return true;
  if (n == 2) return p.num_vertices() % 2 == 0;
  const auto two_faces = faces_of_codim(p, n - 2);
  return std::all_of(two_faces.begin(), two_faces.end(), [](const Face& f) { return f.size() % 2 == 0; });
}

/// Decides whether some facet bijection carries the vertex-facet sets of p onto those of q.
inline bool combinatorially_equivalent(const SimplePolytope& p, const SimplePolytope& q) {
  if (p.dim() != q.dim() || p.num_facets() != q.num_facets() || p.num_vertices() != q.num_vertices()) return false;
  const int m = p.num_facets();
  auto overlap = [](const SimplePolytope& s, int a, int b) {
    return (s.facet_indicator(a) & s.facet_indicator(b)).weight();
  };
  std::set<std::vector<int>> target;
  for (int v = 0; v < q.num_vertices(); ++v) target.insert(q.vertex_facets(v));

  std::vector<int> image(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  auto consistent = [&](int f) {
    const int g = image[static_cast<std::size_t>(f)];
    if (p.facet(f).size() != q.facet(g).size()) return false;
    for (int e = 0; e < f; ++e) {
      if (overlap(p, e, f) != overlap(q, image[static_cast<std::size_t>(e)], g)) return false;
    }
    return true;
  };
  auto complete = [&] {
    for (int v = 0; v < p.num_vertices(); ++v) {
      std::vector<int> mapped;
      for (int f : p.vertex_facets(v)) mapped.push_back(image[static_cast<std::size_t>(f)]);
      std::sort(mapped.begin(), mapped.end());
      if (!target.count(mapped)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int f) -> bool {
    if (f == m) return complete();
    for (int g = 0; g < m; ++g) {
      if (used[static_cast<std::size_t>(g)]) continue;
      image[static_cast<std::size_t>(f)] = g;
      if (consistent(f)) {
        used[static_cast<std::size_t>(g)] = true;
        if (self(self, f + 1)) return true;
        used[static_cast<std::size_t>(g)] = false;
      }
    }
    image[static_cast<std::size_t>(f)] = -1;
    return false;
  };
  return search(search, 0);
}

}  // namespace facecode
