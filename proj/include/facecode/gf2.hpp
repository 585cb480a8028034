#pragma once

// Linear algebra and code-theoretic primitives over the two-element field.
//
// Vectors are packed little-endian, 64 coordinates per word: coordinate i lives
// in word i / 64 at bit i % 64. Bits beyond the length are always zero, so
// equality, hashing and ordering can work on whole words.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "facecode/error.hpp"

namespace facecode::gf2 {

inline constexpr std::size_t kWordBits = 64;

/// Largest code dimension for which exhaustive codeword enumeration is attempted.
inline constexpr int kEnumerationMaxDim = 28;

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  static BitVector ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    v.clear_tail();
    return v;
  }

  static BitVector unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
  }

  /// Parses a string of '0'/'1' characters; character i is coordinate i.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        fail(ErrorKind::InvalidInput, "bit string contains '" + std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  template <typename Indices>
  static BitVector from_indices(std::size_t length, const Indices& indices) {
    BitVector v(length);
    for (auto i : indices) v.set(static_cast<std::size_t>(i));
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    require(i < length_, ErrorKind::InvalidInput, "coordinate out of range");
    const auto mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { set(i, !get(i)); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return length_;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto word = words_[w];
      while (word != 0) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  /// Unchecked in-place XOR; both operands must have the same length.
  void xor_assign(const BitVector& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_length(other);
    xor_assign(other);
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  /// True iff every set coordinate of this vector is also set in `other`.
  bool subset_of(const BitVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  bool intersects(const BitVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Orders by length, then lexicographically by coordinate string.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.to_string() <=> b.to_string();
  }

 private:
  void clear_tail() noexcept {
    if (const auto rem = length_ % kWordBits; rem != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
  }

  void check_same_length(const BitVector& other) const {
    require(length_ == other.length_, ErrorKind::InvalidInput,
            "length mismatch: " + std::to_string(length_) + " vs " + std::to_string(other.length_));
  }

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Standard bilinear form: sum of coordinatewise products, mod 2.
inline int inner(const BitVector& u, const BitVector& v) {
  require(u.size() == v.size(), ErrorKind::InvalidInput, "inner: length mismatch");
  unsigned parity = 0;
  for (std::size_t w = 0; w < u.words().size(); ++w) {
    parity ^= static_cast<unsigned>(std::popcount(u.words()[w] & v.words()[w])) & 1U;
  }
  return static_cast<int>(parity);
}

/// Coordinatewise product.
inline BitVector circ(const BitVector& u, const BitVector& v) {
  require(u.size() == v.size(), ErrorKind::InvalidInput, "circ: length mismatch");
  return u & v;
}

/// A subspace of F_2^length, kept as a reduced row-echelon basis.
///
/// Basis rows are sorted by pivot (lowest set coordinate); each pivot column is
/// zero in every other basis row. Two codes are equal iff their bases are.
class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode reduce(std::size_t length, std::span<const BitVector> generators) {
    LinearCode code;
    code.length_ = length;
    code.generators_.assign(generators.begin(), generators.end());
    for (const auto& g : generators) {
      require(g.size() == length, ErrorKind::InvalidInput,
              "generator of length " + std::to_string(g.size()) + " in a code of length " + std::to_string(length));
      code.insert(g);
    }
    return code;
  }

  static LinearCode reduce(std::span<const BitVector> generators) {
    require(!generators.empty(), ErrorKind::InvalidInput, "cannot infer the length of an empty generator set");
    return reduce(generators.front().size(), generators);
  }

  static LinearCode reduce(std::size_t length, std::initializer_list<BitVector> generators) {
    return reduce(length, std::span<const BitVector>(generators.begin(), generators.size()));
  }

  static LinearCode zero(std::size_t length) { return reduce(length, std::span<const BitVector>{}); }

  static LinearCode full(std::size_t length) {
    std::vector<BitVector> rows;
    rows.reserve(length);
    for (std::size_t i = 0; i < length; ++i) rows.push_back(BitVector::unit(length, i));
    return reduce(length, rows);
  }

  std::size_t length() const noexcept { return length_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }
  const std::vector<BitVector>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residue of v after elimination against the basis; zero iff v is a codeword.
  BitVector residue(BitVector v) const {
    require(v.size() == length_, ErrorKind::InvalidInput, "residue: length mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (v.get(pivots_[i])) v.xor_assign(basis_[i]);
    }
    return v;
  }

  bool contains(const BitVector& v) const { return residue(v).is_zero(); }

  bool contains(const LinearCode& other) const {
    if (other.length_ != length_) return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const BitVector& b) { return contains(b); });
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.length_ == b.length_ && a.basis_ == b.basis_;
  }

 private:
  void insert(BitVector v) {
    v = residue(std::move(v));
    if (v.is_zero()) return;
    const auto pivot = v.first_set();
    // Keep existing rows reduced with respect to the new pivot.
    for (auto& row : basis_) {
      if (row.get(pivot)) row.xor_assign(v);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(v));
  }

  std::size_t length_ = 0;
  std::vector<BitVector> generators_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Orthogonal complement under the standard bilinear form.
inline LinearCode dual_code(const LinearCode& code) {
  const auto n = code.length();
  std::vector<bool> is_pivot(n, false);
  for (auto p : code.pivots()) is_pivot[p] = true;
  std::vector<BitVector> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v = BitVector::unit(n, free);
    for (std::size_t i = 0; i < code.basis().size(); ++i) {
      if (code.basis()[i].get(free)) v.set(code.pivots()[i]);
    }
    rows.push_back(std::move(v));
  }
  return LinearCode::reduce(n, rows);
}

/// True iff C is the whole even-weight subspace: codimension one, every basis row even.
inline bool is_even_weight_space(const LinearCode& code) {
  return code.dim() + 1 == static_cast<int>(code.length()) &&
         std::all_of(code.basis().begin(), code.basis().end(), [](const BitVector& b) { return b.weight() % 2 == 0; });
}

struct SelfDualTrace {
  bool self_dual = false;            // C equals its dual
  bool half_dimension = false;       // dim C = length / 2
  bool pairwise_orthogonal = false;  // <x,y> = 0 over all basis pairs, x = y included
  bool circ_even = false;            // x o y has even weight over all basis pairs
};

/// Decides C = C^perp and evaluates the orthogonality and circ criteria alongside.
/// When dim C = length/2 the three criteria must agree; a disagreement throws.
inline SelfDualTrace is_self_dual(const LinearCode& code) {
  SelfDualTrace t;
  t.self_dual = code.length() % 2 == 0 && code == dual_code(code);
  t.half_dimension = 2 * static_cast<std::size_t>(code.dim()) == code.length();
  t.pairwise_orthogonal = true;
  t.circ_even = true;
  const auto& basis = code.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (inner(basis[i], basis[j]) != 0) t.pairwise_orthogonal = false;
      if (circ(basis[i], basis[j]).weight() % 2 != 0) t.circ_even = false;
    }
  }
  if (t.half_dimension) {
    expect_theorem(t.self_dual == t.pairwise_orthogonal && t.self_dual == t.circ_even,
                   "self-duality criteria disagree on a half-dimensional code");
  }
  return t;
}

namespace detail {

inline int worker_count(int requested, std::uint64_t total) {
  int w = requested <= 0 ? static_cast<int>(std::max(1U, std::thread::hardware_concurrency())) : requested;
  if (total < (std::uint64_t{1} << 14)) w = 1;
  return std::max(1, w);
}

/// Visits every codeword with index in [begin, end) of the Gray-code order,
/// calling visit(weight). Consecutive codewords differ by one basis row.
template <typename Visit>
void gray_walk(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const auto& basis = code.basis();
  BitVector word(code.length());
  const std::uint64_t gray = begin ^ (begin >> 1);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if ((gray >> b) & 1U) word.xor_assign(basis[b]);
  }
  visit(word.weight());
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    word.xor_assign(basis[static_cast<std::size_t>(std::countr_zero(i))]);
    visit(word.weight());
  }
}

/// Splits [0, 2^dim) into `workers` contiguous chunks and runs fn(begin, end, slot).
template <typename Fn>
void partition_range(std::uint64_t total, int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (auto& t : threads) t.join();
}

inline void check_budget(const LinearCode& code) {
  require(code.dim() <= kEnumerationMaxDim, ErrorKind::BudgetExceeded,
          "code dimension " + std::to_string(code.dim()) + " exceeds the enumeration cap of " +
              std::to_string(kEnumerationMaxDim));
}

}  // namespace detail

/// Exact minimum weight over all nonzero codewords, by Gray-code enumeration.
/// `workers` <= 0 selects the hardware concurrency; the result does not depend on it.
inline std::size_t min_distance(const LinearCode& code, int workers = 1) {
  require(code.dim() >= 1, ErrorKind::Undefined, "minimum distance of the zero code");
  detail::check_budget(code);
  const std::uint64_t total = std::uint64_t{1} << code.dim();
  const int w = detail::worker_count(workers, total);
  std::vector<std::size_t> best(static_cast<std::size_t>(w), code.length() + 1);
  detail::partition_range(total, w, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    auto& b = best[static_cast<std::size_t>(slot)];
    detail::gray_walk(code, begin, end, [&](std::size_t wt) {
      if (wt != 0 && wt < b) b = wt;
    });
  });
  return *std::min_element(best.begin(), best.end());
}

struct WeightEnumerator {
  std::map<std::size_t, std::uint64_t> counts;
  bool doubly_even = false;
};

/// Counts codewords by weight. The doubly-even flag is computed both from the
/// enumeration and from the basis (weights 0 mod 4, pairwise orthogonal); the
/// two routes must agree.
inline WeightEnumerator weight_enumerator(const LinearCode& code, int workers = 1) {
  detail::check_budget(code);
  const std::uint64_t total = std::uint64_t{1} << code.dim();
  const int w = detail::worker_count(workers, total);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(w),
                                                  std::vector<std::uint64_t>(code.length() + 1, 0));
  detail::partition_range(total, w, [&](std::uint64_t begin, std::uint64_t end, int slot) {
    auto& counts = partial[static_cast<std::size_t>(slot)];
    detail::gray_walk(code, begin, end, [&](std::size_t wt) { ++counts[wt]; });
  });
  WeightEnumerator out;
  out.doubly_even = true;
  for (std::size_t wt = 0; wt <= code.length(); ++wt) {
    std::uint64_t c = 0;
    for (const auto& p : partial) c += p[wt];
    if (c != 0) {
      out.counts[wt] = c;
      if (wt % 4 != 0) out.doubly_even = false;
    }
  }
  bool basis_route = true;
  const auto& basis = code.basis();
  for (std::size_t i = 0; i < basis.size() && basis_route; ++i) {
    if (basis[i].weight() % 4 != 0) basis_route = false;
    for (std::size_t j = i + 1; j < basis.size() && basis_route; ++j) {
      if (inner(basis[i], basis[j]) != 0) basis_route = false;
    }
  }
  expect_theorem(basis_route == out.doubly_even, "doubly-even: enumeration and basis criterion disagree");
  return out;
}

/// Doubly-even test from the basis alone (no enumeration, no budget).
inline bool is_doubly_even(const LinearCode& code) {
  const auto& basis = code.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].weight() % 4 != 0) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (inner(basis[i], basis[j]) != 0) return false;
    }
  }
  return true;
}

/// True iff some nonzero codeword has weight < bound. Uses enumeration when the
/// dimension allows, otherwise tests every vector of weight < bound for
/// membership (at most `budget` candidates).
inline bool has_codeword_below(const LinearCode& code, std::size_t bound, std::uint64_t budget = 5'000'000) {
  if (code.dim() == 0) return false;
  if (code.dim() <= kEnumerationMaxDim) return min_distance(code) < bound;
  const std::size_t n = code.length();
  std::uint64_t candidates = 0;
  std::uint64_t binom = 1;
  for (std::size_t w = 1; w < bound && w <= n; ++w) {
    binom = binom * (n - w + 1) / w;
    candidates += binom;
    require(candidates <= budget, ErrorKind::BudgetExceeded, "low-weight search exceeds its candidate budget");
  }
  for (std::size_t w = 1; w < bound && w <= n; ++w) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      if (code.contains(BitVector::from_indices(n, idx))) return true;
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

/// RM(k, m): evaluation vectors of all monomials of degree <= k in m variables
/// over the points 0..2^m-1; point p assigns variable j the bit j of p.
inline LinearCode reed_muller(int k, int m) {
  require(m >= 0 && m < 24, ErrorKind::InvalidInput, "reed_muller: m out of range");
  require(0 <= k && k <= m, ErrorKind::InvalidInput, "reed_muller: need 0 <= k <= m");
  const std::size_t n = std::size_t{1} << m;
  std::vector<BitVector> rows;
  for (std::uint32_t mono = 0; mono < (1U << m); ++mono) {
    if (std::popcount(mono) > k) continue;
    BitVector row(n);
    for (std::uint32_t p = 0; p < n; ++p) {
      if ((p & mono) == mono) row.set(p);
    }
    rows.push_back(std::move(row));
  }
  return LinearCode::reduce(n, rows);
}

// Matrix text format: one row per line, '0'/'1' characters, no separators.

inline std::string format_matrix(std::span<const BitVector> rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

inline std::vector<BitVector> parse_matrix(std::string_view text) {
  std::vector<BitVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(BitVector::from_string(line));
    require(rows.back().size() == rows.front().size(), ErrorKind::InvalidInput, "matrix rows differ in length");
  }
  return rows;
}

}  // namespace facecode::gf2
