#pragma once

// Screens (length, minimum distance, doubly-even) triples for realizability as
// B_k(P) of a (2k+1)-dimensional even polytope P. Each pruning step records the
// fact it relies on and the numbers it was instantiated with.

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "facecode/constructors.hpp"
#include "facecode/error.hpp"
#include "facecode/facecodes.hpp"
#include "facecode/gf2.hpp"

namespace facecode {

struct ScreenRule {
  std::string id;
  std::string citation;  // the fact the rule instantiates
  std::string detail;    // the instantiation with concrete numbers
};

struct ScreenVerdict {
  enum class Status { Infeasible, FeasibleWitness, Unknown };

  Status status = Status::Unknown;
  std::vector<ScreenRule> trace;
  std::optional<Recipe> witness;
  std::vector<int> surviving_dimensions;
};

constexpr std::string_view to_string(ScreenVerdict::Status s) {
  switch (s) {
    case ScreenVerdict::Status::Infeasible: return "Infeasible";
    case ScreenVerdict::Status::FeasibleWitness: return "FeasibleWitness";
    case ScreenVerdict::Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace screen_facts {
inline constexpr const char* kEvenLength = "a self-dual code of length l has dimension l/2, so l is even";
inline constexpr const char* kEvenWeights = "every word of a self-dual code has even weight";
inline constexpr const char* kGleason = "the length of a doubly-even self-dual code is divisible by 8";
inline constexpr const char* kDoublyEvenWeights = "every word of a doubly-even code has weight divisible by 4";
inline constexpr const char* kVertexCount = "an even n-polytope has at least 2^n vertices";
inline constexpr const char* kSegment = "the only even 1-polytope is the segment, realizing [2,1,2]";
inline constexpr const char* kDimThree = "B_1 of a 3-dimensional even polytope always has minimum distance 4";
inline constexpr const char* kFaceBound =
    "a codimension-k face f of an even polytope satisfies |V(P)| >= 2^k |V(f)|, and d <= |V(f)| for the "
    "codimension-(n-1)/2 faces";
inline constexpr const char* kDoublyEvenFaces =
    "B_k of a (2k+1)-dimensional even polytope is doubly-even iff every (k+1)-face has 0 mod 4 vertices";
inline constexpr const char* kCubeFace =
    "|V(P)| = 2^k |V(f)| forces P = f x [0,1]^k, and an even polytope with a facet of half its vertices has a "
    "3-cube face";
}  // namespace screen_facts

namespace detail {

inline std::string join(const std::set<int>& values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "}";
  return out.str();
}

/// Recomputes B_k of a candidate witness and checks it is a self-dual code with
/// the requested parameters.
inline bool witness_matches(const SimplePolytope& p, int length, int distance, bool doubly_even) {
  if (p.num_vertices() != length || p.dim() % 2 == 0 || !is_even(p)) return false;
  const int k = (p.dim() - 1) / 2;
  const auto fc = face_code(p, k);
  if (!gf2::is_self_dual(fc.code).self_dual) return false;
  if (gf2::is_doubly_even(fc.code) != doubly_even) return false;
  const bool has_weight_d = std::any_of(fc.faces.begin(), fc.faces.end(), [&](const Face& f) {
    return f.size() == static_cast<std::size_t>(distance);
  });
  if (fc.code.dim() <= gf2::kEnumerationMaxDim) {
    return gf2::min_distance(fc.code) == static_cast<std::size_t>(distance);
  }
  return has_weight_d && !gf2::has_codeword_below(fc.code, static_cast<std::size_t>(distance));
}

}  // namespace detail

/// Decides whether a self-dual [l, l/2, d] code (doubly-even or not) can be
/// B_k(P) for an even (2k+1)-polytope P. Infeasible always carries a trace;
/// FeasibleWitness always carries a recomputed and verified construction.
inline ScreenVerdict realizability_screen(int length, int distance, bool doubly_even) {
  using facecode::detail::join;
  namespace facts = screen_facts;
  require(length >= 2 && distance >= 2, ErrorKind::InvalidInput, "screen needs l >= 2 and d >= 2");
  ScreenVerdict v;
  const std::string l = std::to_string(length);
  const std::string d = std::to_string(distance);
  auto infeasible = [&](std::string id, const char* citation, std::string detail) {
    v.trace.push_back({std::move(id), citation, std::move(detail)});
    v.status = ScreenVerdict::Status::Infeasible;
    return v;
  };

  if (length % 2 != 0) return infeasible("odd-length", facts::kEvenLength, "l=" + l + " is odd");
  if (distance % 2 != 0) return infeasible("odd-distance", facts::kEvenWeights, "d=" + d + " is odd");
  if (doubly_even && length % 8 != 0) return infeasible("doubly-even-length", facts::kGleason, "l=" + l + " is not 0 mod 8");
  if (doubly_even && distance % 4 != 0) {
    return infeasible("doubly-even-distance", facts::kDoublyEvenWeights, "d=" + d + " is not 0 mod 4");
  }

  std::set<int> dims;
  for (int n = 1; n < 31 && (1LL << n) <= length; n += 2) dims.insert(n);
  v.trace.push_back({"vertex-count", facts::kVertexCount, "2^n <= " + l + " leaves odd n in " + join(dims)});

  if (dims.count(1) && !(length == 2 && distance == 2)) {
    dims.erase(1);
    v.trace.push_back({"dim-1", facts::kSegment, "(l,d)=(" + l + "," + d + ") != (2,2) rules out n=1"});
  }
  if (dims.count(3) && distance != 4) {
    dims.erase(3);
    v.trace.push_back({"dim-3", facts::kDimThree, "d=" + d + " != 4 rules out n=3"});
  }
  for (auto it = dims.begin(); it != dims.end();) {
    const int n = *it;
    if (n < 5) {
      ++it;
      continue;
    }
    const int k = (n - 1) / 2;
    if (static_cast<long long>(distance) << k > length) {
      v.trace.push_back({"face-size", facts::kFaceBound,
                         "n=" + std::to_string(n) + ": d=" + d + " > l/2^" + std::to_string(k) + " = " +
                             std::to_string(length) + "/" + std::to_string(1LL << k)});
      it = dims.erase(it);
    } else {
      ++it;
    }
  }

  if (dims.count(5)) {
    const int step = doubly_even ? 4 : 2;
    std::set<int> s3;
    for (int s = distance; s <= length / 4; ++s) {
      if (s % step == 0) s3.insert(s);
    }
    v.trace.push_back({"dim-5-3faces", doubly_even ? facts::kDoublyEvenFaces : facts::kFaceBound,
                       "3-face sizes s with " + d + " <= s <= " + std::to_string(length / 4) + ", s = 0 mod " +
                           std::to_string(step) + ": " + join(s3)});
    if (s3.empty()) {
      dims.erase(5);
      v.trace.push_back({"dim-5-empty-3faces", facts::kFaceBound, "no admissible 3-face size rules out n=5"});
    } else if (s3.size() == 1) {
      const int s = *s3.begin();
      std::set<int> s4;
      for (int t = 2 * s; t <= length / 2; ++t) {
        if (t % step == 0) s4.insert(t);
      }
      v.trace.push_back({"dim-5-4faces", facts::kFaceBound,
                         "4-face sizes t with " + std::to_string(2 * s) + " <= t <= " + std::to_string(length / 2) +
                             ", t = 0 mod " + std::to_string(step) + ": " + join(s4)});
      if (distance > 8) {
        for (auto it = s4.begin(); it != s4.end();) {
          const int t = *it;
          if (t == 2 * s || 2 * t == length) {
            const std::string why = t == 2 * s ? "t=" + std::to_string(t) + " = 2*" + std::to_string(s)
                                               : "2*t = 2*" + std::to_string(t) + " = l";
            v.trace.push_back({"dim-5-cube-face", facts::kCubeFace,
                               why + " forces a 3-cube face with 8 < d=" + d + " vertices"});
            it = s4.erase(it);
          } else {
            ++it;
          }
        }
      }
      if (s4.empty()) {
        dims.erase(5);
        v.trace.push_back({"dim-5-empty-4faces", facts::kCubeFace, "no admissible 4-face size rules out n=5"});
      }
    }
  }

  v.surviving_dimensions.assign(dims.begin(), dims.end());
  if (dims.empty()) {
    v.status = ScreenVerdict::Status::Infeasible;
    v.trace.push_back({"no-dimension", facts::kVertexCount, "every odd dimension was ruled out"});
    return v;
  }

  std::vector<Recipe> candidates;
  if (length == 2 && distance == 2) candidates.push_back(parse_recipe("segment"));
  for (int k = 1; 2 * k + 1 < 31; ++k) {
    if (length == (1LL << (2 * k + 1)) && distance == (1 << (k + 1)) && doubly_even) {
      candidates.push_back(parse_recipe("cube " + std::to_string(2 * k + 1)));
    }
  }
  if (distance == 4 && length % 4 == 0 && length >= 8) {
    const int sides = length / 2;
    if (!doubly_even || sides % 4 == 0) candidates.push_back(parse_recipe("prism " + std::to_string(sides)));
  }
  for (const auto& recipe : candidates) {
    bool ok = false;
    try {
      ok = detail::witness_matches(recipe.build(), length, distance, doubly_even);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      v.trace.push_back({"witness-budget", "witness verification needs exhaustive enumeration",
                         recipe.to_string() + ": " + e.what()});
    }
    if (ok) {
      v.status = ScreenVerdict::Status::FeasibleWitness;
      v.witness = recipe;
      v.trace.push_back({"witness", "B_k of the witness recomputed", recipe.to_string() + " realizes [" + l + "," +
                                                                          std::to_string(length / 2) + "," + d + "]"});
      return v;
    }
  }
  v.status = ScreenVerdict::Status::Unknown;
  return v;
}

struct MallowsSloane {
  int length = 0;
  int bound = 0;

  /// A doubly-even self-dual code meeting the bound.
  bool is_extremal(const gf2::LinearCode& code) const {
    if (static_cast<int>(code.length()) != length || !gf2::is_self_dual(code).self_dual || !gf2::is_doubly_even(code)) {
      return false;
    }
    return static_cast<int>(gf2::min_distance(code)) == bound;
  }
};

/// Upper bound 4*floor(l/24)+4 on the minimum distance of a doubly-even self-dual code of length l.
inline MallowsSloane mallows_sloane(int length) {
  require(length > 0 && length % 8 == 0, ErrorKind::Inapplicable,
          "doubly-even self-dual codes exist only for lengths divisible by 8, got " + std::to_string(length));
  return {length, 4 * (length / 24) + 4};
}

}  // namespace facecode
