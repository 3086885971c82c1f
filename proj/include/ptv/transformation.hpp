#pragma once

// Partial transformations of {1..n}: the value type, the text codec, left-to-
// right composition, structural statistics, and exhaustive enumeration.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptv {

/// Thrown when a literal does not parse.  `position` is the 1-based index of
/// the offending token (or line, for table texts).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int position)
      : std::runtime_error(message), position_(position) {}
  int position() const noexcept { return position_; }

 private:
  int position_;
};

/// Thrown when an exhaustive operation is requested above its degree cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap for operations that sweep all (n+1)^n transformations.
inline constexpr int kMaxExhaustiveDegree = 5;

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

/// A partial self-map of {1..n}.  Plain value type: copyable, ordered, equal
/// iff degree and all entries agree.  Points and images are 1-based.
///
/// Entries are stored as digits in [0, n]: digit d < n encodes image d+1 and
/// digit n encodes "undefined".  Lexicographic comparison of the digit string
/// therefore sorts undefined entries after all defined ones, which is exactly
/// the enumeration order exposed by nth_transformation / index_of.
class PartialTransformation {
 public:
  PartialTransformation() = default;

  /// Entries are images in 1..n, with 0 standing for "undefined".
  PartialTransformation(std::initializer_list<int> images)
      : PartialTransformation(std::vector<int>(images)) {}

  explicit PartialTransformation(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    digits_.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 0 || v > n)
        throw std::invalid_argument("image value " + std::to_string(v) +
                                    " out of range at point " + std::to_string(i + 1));
      digits_.push_back(v == 0 ? n : v - 1);
    }
  }

  /// The nowhere-defined map: the zero of composition.
  static PartialTransformation zero(int n) {
    PartialTransformation t;
    t.digits_.assign(checked_degree(n), n);
    return t;
  }

  static PartialTransformation identity(int n) {
    PartialTransformation t;
    t.digits_.resize(checked_degree(n));
    for (int p = 0; p < n; ++p) t.digits_[p] = p;
    return t;
  }

  int degree() const { return static_cast<int>(digits_.size()); }

  bool defined(int p) const { return digits_[checked_point(p) - 1] < degree(); }

  /// Image of p, or 0 when p is undefined.
  int image(int p) const {
    const int d = digits_[checked_point(p) - 1];
    return d < degree() ? d + 1 : 0;
  }

  bool is_zero() const {
    const int n = degree();
    return std::all_of(digits_.begin(), digits_.end(), [n](int d) { return d == n; });
  }

  friend bool operator==(const PartialTransformation&, const PartialTransformation&) = default;
  friend std::strong_ordering operator<=>(const PartialTransformation&,
                                          const PartialTransformation&) = default;

  friend PartialTransformation compose(const PartialTransformation& x,
                                       const PartialTransformation& y);
  friend PartialTransformation nth_transformation(int n, std::uint64_t index);
  friend std::uint64_t index_of(const PartialTransformation& x);

 private:
  static int checked_degree(int n) {
    if (n < 0) throw std::invalid_argument("degree must be non-negative");
    return n;
  }

  int checked_point(int p) const {
    if (p < 1 || p > degree())
      throw std::out_of_range("point " + std::to_string(p) + " outside 1.." +
                              std::to_string(degree()));
    return p;
  }

  std::vector<int> digits_;  // digit n = undefined, else image - 1
};

/// Left-to-right composition: apply x first, then y.  (xy)(p) = y(x(p)),
/// defined exactly when p is in dom(x) and x(p) is in dom(y).
inline PartialTransformation compose(const PartialTransformation& x,
                                     const PartialTransformation& y) {
  const int n = x.degree();
  if (y.degree() != n)
    throw std::invalid_argument("cannot compose transformations of degrees " +
                                std::to_string(n) + " and " + std::to_string(y.degree()));
  PartialTransformation result;
  result.digits_.resize(n);
  for (int p = 0; p < n; ++p) {
    const int d = x.digits_[p];
    result.digits_[p] = d < n ? y.digits_[d] : n;
  }
  return result;
}

// --- text codec ------------------------------------------------------------
//
// A transformation literal is a comma-separated list of exactly n tokens,
// each a decimal point in 1..n or "-" for undefined: "2,2,-" maps 1 and 2 to
// 2 and leaves 3 undefined.  This is the single wire format used everywhere.

inline PartialTransformation parse_transformation(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    tokens.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(tokens.size()) != n) {
    const int count = static_cast<int>(tokens.size());
    throw ParseError("expected " + std::to_string(n) + " entries, found " +
                         std::to_string(count),
                     count < n ? count + 1 : n + 1);
  }
  std::vector<int> images(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string_view tok = tokens[i];
    const int position = static_cast<int>(i) + 1;
    if (tok == "-") {
      images[i] = 0;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("malformed entry \"" + std::string(tok) + "\" at position " +
                           std::to_string(position),
                       position);
    if (value < 1 || value > n)
      throw ParseError("entry " + std::to_string(value) + " out of range 1.." +
                           std::to_string(n) + " at position " + std::to_string(position),
                       position);
    images[i] = value;
  }
  return PartialTransformation(images);
}

inline std::string format_transformation(const PartialTransformation& x) {
  std::string out;
  for (int p = 1; p <= x.degree(); ++p) {
    if (p > 1) out += ',';
    if (x.defined(p))
      out += std::to_string(x.image(p));
    else
      out += '-';
  }
  return out;
}

// --- structural statistics ---------------------------------------------------

/// Domain, image, rank, undefined set, and the preimage fiber over every
/// image point.  All point lists are ascending.
struct TransformationStats {
  std::vector<int> domain;
  std::vector<int> image;
  std::vector<int> zset;  // complement of the domain
  int rank = 0;           // |image|
  int z = 0;              // |zset|
  std::map<int, std::vector<int>> fibers;  // image point -> its full preimage

  int fiber_size(int t) const {
    const auto it = fibers.find(t);
    return it == fibers.end() ? 0 : static_cast<int>(it->second.size());
  }
};

inline TransformationStats analyze(const PartialTransformation& a) {
  TransformationStats s;
  for (int p = 1; p <= a.degree(); ++p) {
    if (a.defined(p)) {
      s.domain.push_back(p);
      s.fibers[a.image(p)].push_back(p);
    } else {
      s.zset.push_back(p);
    }
  }
  for (const auto& [t, fiber] : s.fibers) s.image.push_back(t);
  s.rank = static_cast<int>(s.image.size());
  s.z = static_cast<int>(s.zset.size());
  return s;
}

// --- type vectors ------------------------------------------------------------

/// Fiber-size census (alpha_1, ..., alpha_n): alpha_k is the number of image
/// points whose full preimage has exactly k elements.  Two sandwich elements
/// yield isomorphic deformed semigroups exactly when their types agree, so
/// this is the classifying invariant.
struct TypeVector {
  std::vector<int> alpha;

  int degree() const { return static_cast<int>(alpha.size()); }

  int rank() const {
    int r = 0;
    for (int k : alpha) r += k;
    return r;
  }

  int defined_points() const {
    int total = 0;
    for (int k = 1; k <= degree(); ++k) total += k * alpha[k - 1];
    return total;
  }

  int z() const { return degree() - defined_points(); }

  bool valid() const {
    for (int k : alpha)
      if (k < 0) return false;
    return defined_points() <= degree();
  }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend std::strong_ordering operator<=>(const TypeVector&, const TypeVector&) = default;
};

inline TypeVector type_of(const PartialTransformation& a) {
  TypeVector t;
  t.alpha.assign(a.degree(), 0);
  for (const auto& [point, fiber] : analyze(a).fibers) ++t.alpha[fiber.size() - 1];
  return t;
}

inline std::string format_type(const TypeVector& t) {
  std::string out = "(";
  for (int k = 0; k < t.degree(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(t.alpha[k]);
  }
  out += ')';
  return out;
}

// --- enumeration ---------------------------------------------------------------
//
// The carrier has (n+1)^n elements.  Enumeration order is lexicographic on
// the entry sequence with "undefined" sorting after every point, i.e. index 0
// is the constant map to 1 and the last index is the nowhere-defined map.
// nth_transformation and index_of convert both ways, so sweeps can be
// re-created and sharded by index range.

inline std::uint64_t transformation_count(int n) {
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  if (n > 15) throw std::invalid_argument("carrier size overflows 64 bits beyond degree 15");
  return ipow(static_cast<std::uint64_t>(n) + 1, n);
}

inline PartialTransformation nth_transformation(int n, std::uint64_t index) {
  if (index >= transformation_count(n)) throw std::out_of_range("enumeration index out of range");
  PartialTransformation t;
  t.digits_.resize(n);
  for (int p = n - 1; p >= 0; --p) {
    t.digits_[p] = static_cast<int>(index % (n + 1));
    index /= n + 1;
  }
  return t;
}

inline std::uint64_t index_of(const PartialTransformation& x) {
  const int n = x.degree();
  transformation_count(n);  // degree guard
  std::uint64_t index = 0;
  for (int p = 0; p < n; ++p) index = index * (n + 1) + x.digits_[p];
  return index;
}

inline std::vector<PartialTransformation> enumerate_all(int n,
                                                        int max_degree = kMaxExhaustiveDegree) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n > max_degree)
    throw BudgetError("exhaustive enumeration capped at degree " + std::to_string(max_degree) +
                      ", requested " + std::to_string(n));
  const std::uint64_t count = transformation_count(n);
  std::vector<PartialTransformation> all;
  all.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) all.push_back(nth_transformation(n, i));
  return all;
}

}  // namespace ptv
