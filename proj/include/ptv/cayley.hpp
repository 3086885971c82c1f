#pragma once

// Table-level verification machinery.  A CayleyTable is a plain finite
// multiplication table over opaque labels; every check on it (isomorphism
// verification, backtracking search, abstract fingerprints) uses the table
// alone, so results cannot inherit a bug from the transformation code that
// produced the table.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ptv/multiset.hpp"
#include "ptv/rng.hpp"
#include "ptv/transformation.hpp"
#include "ptv/variant.hpp"

namespace ptv {

/// Full multiplication table of a finite semigroup.  Construction validates
/// closure always and associativity exhaustively up to order 64 (sampled
/// with a fixed seed above that).
class CayleyTable {
 public:
  CayleyTable(std::vector<std::string> labels, std::vector<int> products)
      : labels_(std::move(labels)), products_(std::move(products)) {
    const int m = order();
    if (m < 1) throw std::invalid_argument("table must have at least one element");
    if (products_.size() != static_cast<std::size_t>(m) * m)
      throw std::invalid_argument("product matrix is not order x order");
    for (int entry : products_)
      if (entry < 0 || entry >= m) throw std::invalid_argument("table is not closed");
    check_associativity();
  }

  int order() const { return static_cast<int>(labels_.size()); }

  int product(int i, int j) const { return products_[static_cast<std::size_t>(i) * order() + j]; }

  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& raw_products() const { return products_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  void check_associativity() const {
    const int m = order();
    const auto check = [&](int i, int j, int k) {
      if (product(product(i, j), k) != product(i, product(j, k)))
        throw std::invalid_argument("table is not associative at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    };
    if (m <= 64) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) check(i, j, k);
    } else {
      SplitMix64 rng(0x5eed0a550c1a7e0ull);
      for (int sample = 0; sample < 20000; ++sample)
        check(static_cast<int>(rng.below(m)), static_cast<int>(rng.below(m)),
              static_cast<int>(rng.below(m)));
    }
  }

  std::vector<std::string> labels_;
  std::vector<int> products_;  // row-major, order x order
};

/// Order cap for table construction: (n+1)^n <= 64.
inline constexpr int kMaxTableDegree = 3;

/// Table of x *_a y over the whole carrier in enumeration order, labelled
/// with transformation literals.
inline CayleyTable cayley_table(const VariantSemigroup& v, int max_degree = kMaxTableDegree) {
  if (v.degree() > max_degree)
    throw BudgetError("cayley table capped at degree " + std::to_string(max_degree) +
                      ", requested " + std::to_string(v.degree()));
  const std::vector<PartialTransformation> elements = enumerate_all(v.degree(), max_degree);
  const int m = static_cast<int>(elements.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const PartialTransformation& x : elements) labels.push_back(format_transformation(x));
  std::vector<int> products(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      products[static_cast<std::size_t>(i) * m + j] =
          static_cast<int>(index_of(sandwich_product(v, elements[i], elements[j])));
  return CayleyTable(std::move(labels), std::move(products));
}

// --- serialization ------------------------------------------------------------
//
// Matrix text: a header line "order m" followed by m lines of m space-
// separated indices.  Labels travel in a sidecar list, one label per line.
// Both serializers emit a trailing newline and round-trip bit-exactly.

inline std::string serialize_table(const CayleyTable& table) {
  const int m = table.order();
  std::string out = "order " + std::to_string(m) + "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(table.product(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize_labels(const CayleyTable& table) {
  std::string out;
  for (const std::string& label : table.labels()) {
    out += label;
    out += '\n';
  }
  return out;
}

namespace detail {
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline int parse_int(std::string_view token, int line_number, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(std::string("malformed ") + what + " \"" + std::string(token) +
                         "\" on line " + std::to_string(line_number),
                     line_number);
  return value;
}
}  // namespace detail

inline CayleyTable parse_table(std::string_view table_text, std::string_view labels_text) {
  const std::vector<std::string_view> lines = detail::split_lines(table_text);
  if (lines.empty() || lines[0].substr(0, 6) != "order ")
    throw ParseError("expected \"order m\" header", 1);
  const int m = detail::parse_int(lines[0].substr(6), 1, "order");
  if (m < 1) throw ParseError("order must be positive", 1);
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError("expected " + std::to_string(m) + " matrix rows, found " +
                         std::to_string(lines.size() - 1),
                     static_cast<int>(lines.size()));
  std::vector<int> products;
  products.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const int line_number = i + 2;
    std::string_view row = lines[i + 1];
    int fields = 0;
    std::size_t start = 0;
    while (start <= row.size()) {
      std::size_t end = row.find(' ', start);
      if (end == std::string_view::npos) end = row.size();
      products.push_back(detail::parse_int(row.substr(start, end - start), line_number, "index"));
      ++fields;
      start = end + 1;
    }
    if (fields != m)
      throw ParseError("expected " + std::to_string(m) + " indices on line " +
                           std::to_string(line_number) + ", found " + std::to_string(fields),
                       line_number);
  }
  const std::vector<std::string_view> label_lines = detail::split_lines(labels_text);
  if (static_cast<int>(label_lines.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " labels, found " +
                         std::to_string(label_lines.size()),
                     static_cast<int>(label_lines.size()));
  std::vector<std::string> labels(label_lines.begin(), label_lines.end());
  return CayleyTable(std::move(labels), std::move(products));
}

// --- isomorphism checking -------------------------------------------------------

/// True iff map is a bijection on indices with map[x . y] = map[x] . map[y]
/// for every pair, checked exhaustively.
inline bool verify_isomorphism(const CayleyTable& a, const CayleyTable& b,
                               const std::vector<int>& map) {
  const int m = a.order();
  if (b.order() != m) throw std::invalid_argument("order mismatch");
  if (static_cast<int>(map.size()) != m) throw std::invalid_argument("map has wrong size");
  std::vector<bool> hit(m, false);
  for (int target : map) {
    if (target < 0 || target >= m || hit[target]) return false;
    hit[target] = true;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (map[a.product(i, j)] != b.product(map[i], map[j])) return false;
  return true;
}

/// Abstract invariants read off a table alone: the zero element if one
/// exists, annihilator counts relative to it, and the class-size multiset of
/// the relation "x ~ y iff x.u = y.u for all u" (equal rows).
///
/// Equality compares the invariants, not the zero's position: isomorphic
/// tables may store their zero at different indices.
struct TableFingerprint {
  std::optional<int> zero;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
  std::uint64_t two_sided_count = 0;
  Multiset class_sizes;

  friend bool operator==(const TableFingerprint& a, const TableFingerprint& b) {
    return a.zero.has_value() == b.zero.has_value() && a.left_count == b.left_count &&
           a.right_count == b.right_count && a.two_sided_count == b.two_sided_count &&
           a.class_sizes == b.class_sizes;
  }
};

inline TableFingerprint fingerprint_of_table(const CayleyTable& table) {
  const int m = table.order();
  TableFingerprint fp;
  for (int e = 0; e < m; ++e) {
    bool absorbing = true;
    for (int x = 0; x < m && absorbing; ++x)
      absorbing = table.product(e, x) == e && table.product(x, e) == e;
    if (absorbing) {
      fp.zero = e;
      break;  // a semigroup has at most one zero
    }
  }
  if (fp.zero) {
    for (int x = 0; x < m; ++x) {
      bool left = true, right = true;
      for (int u = 0; u < m; ++u) {
        left = left && table.product(x, u) == *fp.zero;
        right = right && table.product(u, x) == *fp.zero;
      }
      fp.left_count += left;
      fp.right_count += right;
      fp.two_sided_count += left && right;
    }
  }
  std::map<std::vector<int>, std::uint64_t> rows;
  for (int x = 0; x < m; ++x) {
    std::vector<int> row(m);
    for (int u = 0; u < m; ++u) row[u] = table.product(x, u);
    ++rows[std::move(row)];
  }
  for (const auto& [row, count] : rows) ++fp.class_sizes[count];
  return fp;
}

// --- backtracking isomorphism search ---------------------------------------------

struct IsoSearchResult {
  enum class Outcome { isomorphic, not_isomorphic, budget_exceeded };

  Outcome outcome = Outcome::not_isomorphic;
  std::vector<int> witness;  // index map, valid when isomorphic
  std::uint64_t nodes = 0;   // decision nodes visited
};

namespace detail {

// Per-element invariants preserved by any isomorphism; elements may only map
// to elements with an identical signature.
struct ElementSignature {
  bool idempotent = false;
  bool left_zero = false;
  bool right_zero = false;
  int occurrences = 0;  // how often the element appears as a product
  std::vector<int> row_profile;  // sorted multiplicities of row values
  std::vector<int> col_profile;

  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> signatures(const CayleyTable& t) {
  const int m = t.order();
  std::vector<ElementSignature> sigs(m);
  std::vector<int> occurrences(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ++occurrences[t.product(i, j)];
  for (int x = 0; x < m; ++x) {
    ElementSignature& sig = sigs[x];
    sig.idempotent = t.product(x, x) == x;
    sig.left_zero = sig.right_zero = true;
    std::vector<int> row_counts(m, 0), col_counts(m, 0);
    for (int u = 0; u < m; ++u) {
      sig.left_zero = sig.left_zero && t.product(x, u) == x;
      sig.right_zero = sig.right_zero && t.product(u, x) == x;
      ++row_counts[t.product(x, u)];
      ++col_counts[t.product(u, x)];
    }
    sig.occurrences = occurrences[x];
    for (int c : row_counts)
      if (c > 0) sig.row_profile.push_back(c);
    for (int c : col_counts)
      if (c > 0) sig.col_profile.push_back(c);
    std::sort(sig.row_profile.begin(), sig.row_profile.end());
    std::sort(sig.col_profile.begin(), sig.col_profile.end());
  }
  return sigs;
}

struct IsoSearcher {
  const CayleyTable& a;
  const CayleyTable& b;
  std::vector<int> sig_a;  // signature class ids
  std::vector<int> sig_b;
  std::vector<std::vector<int>> candidates;  // per a-element, compatible b-elements
  std::vector<int> order;                    // variable order: most constrained first
  std::vector<int> img;                      // a index -> b index, -1 unassigned
  std::vector<int> pre;                      // b index -> a index, -1 unassigned
  std::vector<int> trail;                    // assigned a indices, in order
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool budget_hit = false;

  // Record img[x] = y.  False on conflict; no-op when already consistent.
  bool record(int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (pre[y] != -1 || sig_a[x] != sig_b[y]) return false;
    img[x] = y;
    pre[y] = x;
    trail.push_back(x);
    return true;
  }

  // Close the trail from position `from` under products of assigned pairs.
  // Forced assignments append to the trail and are processed in turn.
  bool propagate(std::size_t from) {
    for (std::size_t ti = from; ti < trail.size(); ++ti) {
      const int u = trail[ti];
      for (std::size_t tj = 0; tj <= ti; ++tj) {
        const int v = trail[tj];
        if (!record(a.product(u, v), b.product(img[u], img[v]))) return false;
        if (!record(a.product(v, u), b.product(img[v], img[u]))) return false;
      }
    }
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail.size() > mark) {
      const int u = trail.back();
      trail.pop_back();
      pre[img[u]] = -1;
      img[u] = -1;
    }
  }

  bool dfs(std::size_t next) {
    while (next < order.size() && img[order[next]] != -1) ++next;
    if (next == order.size()) return true;
    const int x = order[next];
    for (int y : candidates[x]) {
      if (pre[y] != -1) continue;
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      const std::size_t mark = trail.size();
      if (record(x, y) && propagate(mark) && dfs(next + 1)) return true;
      if (budget_hit) return false;
      unwind(mark);
    }
    return false;
  }
};

}  // namespace detail

/// Decides isomorphism of two tables by backtracking over index assignments
/// with forced-product propagation and signature pruning.  Budget exhaustion
/// is a distinct third outcome, never reported as "not isomorphic".
inline IsoSearchResult brute_force_isomorphic(const CayleyTable& a, const CayleyTable& b,
                                              std::uint64_t node_budget = 100000) {
  const int m = a.order();
  if (b.order() != m) throw std::invalid_argument("order mismatch");

  const std::vector<detail::ElementSignature> raw_a = detail::signatures(a);
  const std::vector<detail::ElementSignature> raw_b = detail::signatures(b);
  std::vector<detail::ElementSignature> pool = raw_a;
  pool.insert(pool.end(), raw_b.begin(), raw_b.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const auto class_id = [&pool](const detail::ElementSignature& sig) {
    return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sig) - pool.begin());
  };

  detail::IsoSearcher search{a, b, {}, {}, {}, {}, {}, {}, {}, 0, node_budget, false};
  search.sig_a.reserve(m);
  search.sig_b.reserve(m);
  for (int x = 0; x < m; ++x) search.sig_a.push_back(class_id(raw_a[x]));
  for (int y = 0; y < m; ++y) search.sig_b.push_back(class_id(raw_b[y]));

  std::vector<int> count_a(pool.size(), 0), count_b(pool.size(), 0);
  for (int id : search.sig_a) ++count_a[id];
  for (int id : search.sig_b) ++count_b[id];
  IsoSearchResult result;
  if (count_a != count_b) {
    result.outcome = IsoSearchResult::Outcome::not_isomorphic;
    return result;
  }

  search.candidates.resize(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (search.sig_a[x] == search.sig_b[y]) search.candidates[x].push_back(y);
  search.order.resize(m);
  for (int x = 0; x < m; ++x) search.order[x] = x;
  std::sort(search.order.begin(), search.order.end(), [&search](int lhs, int rhs) {
    const std::size_t cl = search.candidates[lhs].size(), cr = search.candidates[rhs].size();
    return std::tie(cl, lhs) < std::tie(cr, rhs);
  });
  search.img.assign(m, -1);
  search.pre.assign(m, -1);

  const bool found = search.dfs(0);
  result.nodes = search.nodes;
  if (found) {
    result.outcome = IsoSearchResult::Outcome::isomorphic;
    result.witness = search.img;
  } else if (search.budget_hit) {
    result.outcome = IsoSearchResult::Outcome::budget_exceeded;
  } else {
    result.outcome = IsoSearchResult::Outcome::not_isomorphic;
  }
  return result;
}

}  // namespace ptv
