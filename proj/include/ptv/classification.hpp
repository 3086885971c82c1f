#pragma once

// Isomorphism classification of the deformed semigroups: realizable types,
// type recovery from abstract invariants, explicit isomorphism construction
// between same-type variants, and the partition-function count.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptv/multiset.hpp"
#include "ptv/transformation.hpp"
#include "ptv/variant.hpp"

namespace ptv {

/// Number of integer partitions of k, with p(0) = 1 for the empty partition.
inline std::uint64_t partition_count(int k) {
  if (k < 0) throw std::invalid_argument("partition_count needs k >= 0");
  if (k > 400) throw std::invalid_argument("p(k) overflows 64 bits beyond k = 400");
  std::vector<std::uint64_t> ways(k + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int total = part; total <= k; ++total) ways[total] += ways[total - part];
  return ways[k];
}

namespace detail {
inline void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    gen_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All partitions of k as non-increasing part lists, smallest largest-part
/// first ([1,1,1], [2,1], [3] for k = 3).  k = 0 yields the empty partition.
inline std::vector<std::vector<int>> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of needs k >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  detail::gen_partitions(k, k == 0 ? 1 : k, prefix, out);
  return out;
}

/// Every realizable type at degree n: for k = 0..n each partition of k
/// becomes the type whose alpha_j is the multiplicity of part j.  The list
/// has sum_{k=0..n} p(k) entries.
inline std::vector<TypeVector> enumerate_types(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<TypeVector> types;
  for (int k = 0; k <= n; ++k)
    for (const std::vector<int>& parts : partitions_of(k)) {
      TypeVector t;
      t.alpha.assign(n, 0);
      for (int part : parts) ++t.alpha[part - 1];
      types.push_back(std::move(t));
    }
  return types;
}

/// Number of pairwise non-isomorphic variants of PT_n: sum_{k=0..n} p(k).
inline std::uint64_t count_variants(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += partition_count(k);
  return total;
}

/// Deterministic representative of a type: fiber sizes taken in descending
/// order, fibers filled with consecutive points from 1, image values 1..rank
/// assigned in the same order, remaining points undefined.
inline PartialTransformation canonical_rep(const TypeVector& t) {
  if (!t.valid()) throw std::invalid_argument("invalid type vector");
  std::vector<int> images(t.degree(), 0);
  int next_point = 0;
  int next_value = 0;
  for (int k = t.degree(); k >= 1; --k)
    for (int copy = 0; copy < t.alpha[k - 1]; ++copy) {
      ++next_value;
      for (int j = 0; j < k; ++j) images[next_point++] = next_value;
    }
  return PartialTransformation(images);
}

// --- fingerprints -------------------------------------------------------------

/// Abstract invariants of a variant: the similarity class-size multiset plus
/// the annihilator counts.  The pair (class_sizes, left_count) pins down the
/// sandwich element's type; the right/two-sided counts are carried along for
/// table-level cross-checks.
struct Fingerprint {
  int degree = 0;
  Multiset class_sizes;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
  std::uint64_t two_sided_count = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// True when the two fingerprints agree on the invariants type recovery
/// uses: the class-size multiset and the left annihilator count.
inline bool fingerprint_key_equal(const Fingerprint& a, const Fingerprint& b) {
  return a.degree == b.degree && a.left_count == b.left_count && a.class_sizes == b.class_sizes;
}

/// Observed fingerprint, by sweeping the carrier.
inline Fingerprint fingerprint(const VariantSemigroup& v, int max_degree = kMaxExhaustiveDegree) {
  const AnnihilatorCensus census = annihilator_census(v, max_degree);
  return {v.degree(), sim_classes(v, max_degree).size_multiset(), census.left_count,
          census.right_count, census.two_sided_count};
}

/// Fingerprint a variant of this type must have, from the closed forms.
inline Fingerprint predicted_fingerprint(const TypeVector& t) {
  const AnnihilatorFormulas formulas = annihilator_formulas(t.degree(), t.rank(), t.z());
  return {t.degree(), predicted_class_multiset(t), formulas.left, formulas.right,
          formulas.two_sided};
}

/// Recovers the unique type whose predicted invariants match f, by searching
/// the sum_{k<=n} p(k) candidate types.  The class-size multiset alone can be
/// ambiguous (at n = 2 both (1,0) and (0,1) give {1, 2^2, 4}); the left
/// annihilator count, which equals (z+1)^n, disambiguates.
inline TypeVector reconstruct_type(const Fingerprint& f) {
  std::optional<TypeVector> found;
  for (const TypeVector& t : enumerate_types(f.degree)) {
    const Fingerprint predicted = predicted_fingerprint(t);
    if (predicted.left_count != f.left_count || predicted.class_sizes != f.class_sizes) continue;
    if (found) {
      assert(!"fingerprint matched two distinct types");
      throw std::logic_error("fingerprint matched two distinct types: " + format_type(*found) +
                             " and " + format_type(t));
    }
    found = t;
  }
  if (!found)
    throw std::domain_error("fingerprint does not arise from any sandwich element at degree " +
                            std::to_string(f.degree));
  return *found;
}

// --- permutations and explicit isomorphisms -----------------------------------

/// Total bijection of {1..n}, 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("images do not describe a permutation");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int p) const { return images_.at(p - 1); }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int p = 1; p <= degree(); ++p) inv[images_[p - 1] - 1] = p;
    return Permutation(std::move(inv));
  }

  PartialTransformation to_transformation() const { return PartialTransformation(images_); }

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation, fixed points omitted: "(1 2)(3 5 4)", or "identity".
inline std::string format_permutation(const Permutation& perm) {
  std::string out;
  std::vector<bool> visited(perm.degree(), false);
  for (int start = 1; start <= perm.degree(); ++start) {
    if (visited[start - 1] || perm(start) == start) continue;
    out += '(';
    int p = start;
    bool first = true;
    do {
      visited[p - 1] = true;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(p);
      p = perm(p);
    } while (p != start);
    out += ')';
  }
  return out.empty() ? "identity" : out;
}

/// Witness that target = tau . source . pi (left-to-right).  The map
/// x -> pi^-1 x tau^-1 is then an isomorphism from the source variant onto
/// the target variant.
struct IsoWitness {
  Permutation tau;
  Permutation pi;
  PartialTransformation source;  // a
  PartialTransformation target;  // b = tau a pi
};

inline bool witness_consistent(const IsoWitness& w) {
  return compose(compose(w.tau.to_transformation(), w.source), w.pi.to_transformation()) ==
         w.target;
}

/// Builds permutations tau, pi with b = tau a pi, or nullopt when the types
/// differ (in which case no isomorphism exists at all).  Fibers are matched
/// in descending size order with ties broken by smallest contained point;
/// within matched fibers, undefined sets, and image complements points are
/// paired off in ascending order, so the witness is deterministic.
inline std::optional<IsoWitness> build_isomorphism(const PartialTransformation& a,
                                                   const PartialTransformation& b) {
  const int n = a.degree();
  if (b.degree() != n) throw std::invalid_argument("degree mismatch");
  if (type_of(a) != type_of(b)) return std::nullopt;

  const TransformationStats sa = analyze(a);
  const TransformationStats sb = analyze(b);

  struct Fiber {
    int value;                // the image point
    std::vector<int> points;  // its preimage, ascending
  };
  const auto sorted_fibers = [](const TransformationStats& s) {
    std::vector<Fiber> fibers;
    fibers.reserve(s.fibers.size());
    for (const auto& [value, points] : s.fibers) fibers.push_back({value, points});
    std::sort(fibers.begin(), fibers.end(), [](const Fiber& lhs, const Fiber& rhs) {
      if (lhs.points.size() != rhs.points.size()) return lhs.points.size() > rhs.points.size();
      return lhs.points.front() < rhs.points.front();
    });
    return fibers;
  };
  const std::vector<Fiber> fa = sorted_fibers(sa);
  const std::vector<Fiber> fb = sorted_fibers(sb);

  // tau carries each fiber of b onto the same-rank fiber of a, and the
  // undefined set of b onto that of a; matched point lists pair ascending.
  std::vector<int> tau(n), pi(n);
  for (std::size_t k = 0; k < fb.size(); ++k)
    for (std::size_t j = 0; j < fb[k].points.size(); ++j)
      tau[fb[k].points[j] - 1] = fa[k].points[j];
  for (std::size_t j = 0; j < sb.zset.size(); ++j) tau[sb.zset[j] - 1] = sa.zset[j];

  // pi sends each image value of a to the image value of the matched fiber
  // of b, and the complement of ran(a) onto the complement of ran(b).
  std::vector<bool> in_ran_a(n, false), in_ran_b(n, false);
  for (int t : sa.image) in_ran_a[t - 1] = true;
  for (int t : sb.image) in_ran_b[t - 1] = true;
  for (std::size_t k = 0; k < fa.size(); ++k) pi[fa[k].value - 1] = fb[k].value;
  std::vector<int> comp_a, comp_b;
  for (int p = 1; p <= n; ++p) {
    if (!in_ran_a[p - 1]) comp_a.push_back(p);
    if (!in_ran_b[p - 1]) comp_b.push_back(p);
  }
  for (std::size_t j = 0; j < comp_a.size(); ++j) pi[comp_a[j] - 1] = comp_b[j];

  IsoWitness w{Permutation(std::move(tau)), Permutation(std::move(pi)), a, b};
  if (!witness_consistent(w)) throw std::logic_error("constructed witness violates b = tau a pi");
  return w;
}

/// The isomorphism induced by a witness: f(x) = pi^-1 x tau^-1, a bijection
/// of the carrier with f(x *_a y) = f(x) *_b f(y).
inline PartialTransformation apply_iso(const IsoWitness& w, const PartialTransformation& x) {
  if (x.degree() != w.source.degree()) throw std::invalid_argument("degree mismatch");
  return compose(compose(w.pi.inverse().to_transformation(), x),
                 w.tau.inverse().to_transformation());
}

}  // namespace ptv
