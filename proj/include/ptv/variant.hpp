#pragma once

// The deformed semigroup (PT_n, *_a): sandwich products, annihilator counts,
// and the similarity relation x ~ y iff xau = yau for all u.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptv/multiset.hpp"
#include "ptv/transformation.hpp"

namespace ptv {

/// Same carrier as PT_n, multiplication x *_a y = x a y for a fixed sandwich
/// element a.  The nowhere-defined map stays a two-sided zero.
struct VariantSemigroup {
  PartialTransformation sandwich;

  int degree() const { return sandwich.degree(); }
};

inline PartialTransformation sandwich_product(const VariantSemigroup& v,
                                              const PartialTransformation& x,
                                              const PartialTransformation& y) {
  return compose(compose(x, v.sandwich), y);
}

struct AnnihilatorFlags {
  bool left = false;
  bool right = false;
  bool two_sided = false;
};

/// Membership via the image/domain characterization: x annihilates on the
/// left iff every image value of x lies outside dom(a), and on the right iff
/// x is undefined on all of ran(a).
inline AnnihilatorFlags annihilator_predicates(const VariantSemigroup& v,
                                               const PartialTransformation& x) {
  const int n = v.degree();
  if (x.degree() != n) throw std::invalid_argument("degree mismatch");
  AnnihilatorFlags flags{true, true, false};
  for (int p = 1; p <= n; ++p)
    if (x.defined(p) && v.sandwich.defined(x.image(p))) {
      flags.left = false;
      break;
    }
  for (int p = 1; p <= n && flags.right; ++p)
    if (v.sandwich.defined(p) && x.defined(v.sandwich.image(p))) flags.right = false;
  flags.two_sided = flags.left && flags.right;
  return flags;
}

struct AnnihilatorFormulas {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  std::uint64_t two_sided = 0;
};

/// Closed-form annihilator counts: (z+1)^n left, (n+1)^(n-rank) right,
/// (z+1)^(n-rank) two-sided.
inline AnnihilatorFormulas annihilator_formulas(int degree, int rank, int z) {
  return {ipow(z + 1, degree), ipow(degree + 1, degree - rank), ipow(z + 1, degree - rank)};
}

struct AnnihilatorCensus {
  std::uint64_t left_count = 0;  // counted over the whole carrier
  std::uint64_t right_count = 0;
  std::uint64_t two_sided_count = 0;
  std::uint64_t left_formula = 0;  // closed-form predictions
  std::uint64_t right_formula = 0;
  std::uint64_t two_sided_formula = 0;

  bool consistent() const {
    return left_count == left_formula && right_count == right_formula &&
           two_sided_count == two_sided_formula;
  }
};

inline AnnihilatorCensus annihilator_census(const VariantSemigroup& v,
                                            int max_degree = kMaxExhaustiveDegree) {
  const TransformationStats stats = analyze(v.sandwich);
  const AnnihilatorFormulas formulas = annihilator_formulas(v.degree(), stats.rank, stats.z);
  AnnihilatorCensus census;
  census.left_formula = formulas.left;
  census.right_formula = formulas.right;
  census.two_sided_formula = formulas.two_sided;
  for (const PartialTransformation& x : enumerate_all(v.degree(), max_degree)) {
    const AnnihilatorFlags flags = annihilator_predicates(v, x);
    census.left_count += flags.left;
    census.right_count += flags.right;
    census.two_sided_count += flags.two_sided;
  }
  return census;
}

// --- similarity classes -----------------------------------------------------
//
// x ~ y iff x *_a u = y *_a u for all u, which holds exactly when xa = ya.
// Classes are therefore keyed by the common product xa.

struct SimClass {
  PartialTransformation key;  // the common product x * sandwich
  std::vector<PartialTransformation> members;
};

struct SimClassPartition {
  std::vector<SimClass> classes;  // ascending by key

  Multiset size_multiset() const {
    Multiset sizes;
    for (const SimClass& c : classes) ++sizes[c.members.size()];
    return sizes;
  }
};

inline SimClassPartition sim_classes(const VariantSemigroup& v,
                                     int max_degree = kMaxExhaustiveDegree) {
  std::map<PartialTransformation, std::vector<PartialTransformation>> grouped;
  for (const PartialTransformation& x : enumerate_all(v.degree(), max_degree))
    grouped[compose(x, v.sandwich)].push_back(x);
  SimClassPartition partition;
  partition.classes.reserve(grouped.size());
  for (auto& [key, members] : grouped) partition.classes.push_back({key, std::move(members)});
  return partition;
}

/// Size of the class of x0 by the product formula: with y = x0 * a and
/// p = |dom(y)|, the class has prod_{i in dom(y)} |a^-1(y(i))| * (z+1)^(n-p)
/// elements.  No enumeration involved.
inline std::uint64_t class_size(const VariantSemigroup& v, const PartialTransformation& x0) {
  if (x0.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
  const TransformationStats stats = analyze(v.sandwich);
  const PartialTransformation y = compose(x0, v.sandwich);
  std::uint64_t size = 1;
  int defined = 0;
  for (int p = 1; p <= y.degree(); ++p)
    if (y.defined(p)) {
      size *= static_cast<std::uint64_t>(stats.fiber_size(y.image(p)));
      ++defined;
    }
  return size * ipow(stats.z + 1, y.degree() - defined);
}

/// Class-size multiset of any variant whose sandwich element has type t,
/// computed from t alone.  Each of the n coordinates of a product y
/// independently picks "undefined" (one way, contributing z+1 choices for
/// the preimage entry) or an image point with fiber size k (alpha_k ways,
/// contributing k choices); the multiset collects the products.
inline Multiset predicted_class_multiset(const TypeVector& t) {
  if (!t.valid()) throw std::invalid_argument("invalid type vector");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> options;  // factor, ways
  options.emplace_back(static_cast<std::uint64_t>(t.z()) + 1, 1);
  for (int k = 1; k <= t.degree(); ++k)
    if (t.alpha[k - 1] > 0)
      options.emplace_back(static_cast<std::uint64_t>(k),
                           static_cast<std::uint64_t>(t.alpha[k - 1]));
  Multiset acc{{1, 1}};
  for (int coordinate = 0; coordinate < t.degree(); ++coordinate) {
    Multiset next;
    for (const auto& [value, count] : acc)
      for (const auto& [factor, ways] : options) next[value * factor] += count * ways;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace ptv
