#pragma once

// Named property checks over the variant, classification, and oracle
// modules, run at a given degree.  The CLI `verify` subcommand prints one
// line per check; sampled checks draw from a caller-supplied seed so a
// failing report can be reproduced exactly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptv/cayley.hpp"
#include "ptv/classification.hpp"
#include "ptv/multiset.hpp"
#include "ptv/rng.hpp"
#include "ptv/transformation.hpp"
#include "ptv/variant.hpp"

namespace ptv {

struct CheckResult {
  std::string name;
  bool applicable = true;  // false: out of range at this degree, skipped
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  int max_exhaustive_degree = kMaxExhaustiveDegree;
  std::uint64_t node_budget = 100000;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return !r.applicable || r.passed; });
}

namespace detail {

inline CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

inline CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), false, false, std::move(why)};
}

inline PartialTransformation random_transformation(int n, SplitMix64& rng) {
  return nth_transformation(n, rng.below(transformation_count(n)));
}

inline std::string seed_note(std::uint64_t seed) { return ", seed " + std::to_string(seed); }

// Carrier indices grouped by type, for same-type pair sampling.
inline std::map<TypeVector, std::vector<std::uint64_t>> indices_by_type(int n) {
  std::map<TypeVector, std::vector<std::uint64_t>> groups;
  const std::uint64_t count = transformation_count(n);
  for (std::uint64_t i = 0; i < count; ++i) groups[type_of(nth_transformation(n, i))].push_back(i);
  return groups;
}

inline CheckResult check_sandwich_associativity(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/sandwich-associativity");
  if (n <= 2) {
    const std::vector<PartialTransformation> all = enumerate_all(n);
    std::uint64_t cases = 0;
    for (const PartialTransformation& a : all) {
      const VariantSemigroup v{a};
      for (const PartialTransformation& x : all)
        for (const PartialTransformation& y : all)
          for (const PartialTransformation& z : all) {
            ++cases;
            if (sandwich_product(v, sandwich_product(v, x, y), z) !=
                sandwich_product(v, x, sandwich_product(v, y, z))) {
              r.detail = "violated at a=" + format_transformation(a);
              return r;
            }
          }
    }
    r.passed = true;
    r.detail = "exhaustive, " + std::to_string(cases) + " cases";
    return r;
  }
  if (n > 15) return skipped(r.name, "degree too large to sample the carrier");
  SplitMix64 rng(opt.seed);
  const int samples = 1000;
  for (int i = 0; i < samples; ++i) {
    const VariantSemigroup v{random_transformation(n, rng)};
    const PartialTransformation x = random_transformation(n, rng);
    const PartialTransformation y = random_transformation(n, rng);
    const PartialTransformation z = random_transformation(n, rng);
    if (sandwich_product(v, sandwich_product(v, x, y), z) !=
        sandwich_product(v, x, sandwich_product(v, y, z))) {
      r.detail = "violated at a=" + format_transformation(v.sandwich) + seed_note(opt.seed);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(samples) + " sampled quadruples" + seed_note(opt.seed);
  return r;
}

inline CheckResult check_similarity_criterion(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/similarity-criterion");
  if (n > opt.max_exhaustive_degree)
    return skipped(r.name, "needs the full carrier for the universal quantifier");
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  const auto agrees = [&all](const VariantSemigroup& v, const PartialTransformation& x,
                             const PartialTransformation& y) {
    bool same_action = true;
    for (const PartialTransformation& u : all)
      if (sandwich_product(v, x, u) != sandwich_product(v, y, u)) {
        same_action = false;
        break;
      }
    return same_action == (compose(x, v.sandwich) == compose(y, v.sandwich));
  };
  if (n <= 2) {
    std::uint64_t cases = 0;
    for (const PartialTransformation& a : all)
      for (const PartialTransformation& x : all)
        for (const PartialTransformation& y : all) {
          ++cases;
          if (!agrees(VariantSemigroup{a}, x, y)) {
            r.detail = "violated at a=" + format_transformation(a);
            return r;
          }
        }
    r.passed = true;
    r.detail = "exhaustive, " + std::to_string(cases) + " (a,x,y) triples";
    return r;
  }
  SplitMix64 rng(opt.seed);
  const int samples = 500;
  for (int i = 0; i < samples; ++i) {
    const VariantSemigroup v{random_transformation(n, rng)};
    if (!agrees(v, random_transformation(n, rng), random_transformation(n, rng))) {
      r.detail = "violated at a=" + format_transformation(v.sandwich) + seed_note(opt.seed);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(samples) + " sampled triples" + seed_note(opt.seed);
  return r;
}

inline CheckResult check_annihilator_census(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/annihilator-census");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "census needs the full carrier");
  const std::uint64_t count = transformation_count(n);
  const bool exhaustive = count <= 700;
  std::vector<PartialTransformation> sandwiches;
  if (exhaustive) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < 200; ++i) sandwiches.push_back(random_transformation(n, rng));
  }
  for (const PartialTransformation& a : sandwiches) {
    if (!annihilator_census(VariantSemigroup{a}, opt.max_exhaustive_degree).consistent()) {
      r.detail = "count/formula mismatch at a=" + format_transformation(a);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(sandwiches.size()) +
             (exhaustive ? " sandwiches, exhaustive" : " sampled sandwiches" + seed_note(opt.seed));
  return r;
}

inline CheckResult check_class_partition(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/class-partition");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "needs the full carrier");
  const std::uint64_t count = transformation_count(n);
  const bool exhaustive = count <= 700;
  std::vector<PartialTransformation> sandwiches;
  if (exhaustive) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < 20; ++i) sandwiches.push_back(random_transformation(n, rng));
  }
  for (const PartialTransformation& a : sandwiches) {
    const SimClassPartition partition = sim_classes(VariantSemigroup{a}, opt.max_exhaustive_degree);
    const std::uint64_t classes = partition.classes.size();
    if (classes != ipow(analyze(a).rank + 1, n) ||
        multiset_sum(partition.size_multiset()) != count) {
      r.detail = "partition shape wrong at a=" + format_transformation(a);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(sandwiches.size()) +
             (exhaustive ? " sandwiches, exhaustive" : " sampled sandwiches" + seed_note(opt.seed));
  return r;
}

inline CheckResult check_class_size_formula(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/class-size-formula");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "needs the full carrier");
  const bool exhaustive = transformation_count(n) <= 700;
  std::vector<PartialTransformation> sandwiches;
  if (exhaustive) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < 20; ++i) sandwiches.push_back(random_transformation(n, rng));
  }
  std::uint64_t classes_checked = 0;
  for (const PartialTransformation& a : sandwiches) {
    const VariantSemigroup v{a};
    for (const SimClass& c : sim_classes(v, opt.max_exhaustive_degree).classes) {
      ++classes_checked;
      if (class_size(v, c.members.front()) != c.members.size()) {
        r.detail = "formula misses class of " + format_transformation(c.members.front()) +
                   " at a=" + format_transformation(a);
        return r;
      }
    }
  }
  r.passed = true;
  r.detail = std::to_string(classes_checked) + " classes across " +
             std::to_string(sandwiches.size()) + " sandwiches" +
             (exhaustive ? "" : seed_note(opt.seed));
  return r;
}

inline CheckResult check_predicted_multiset(int n, const VerifyOptions& opt) {
  CheckResult r = named("variant/predicted-multiset");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "needs the full carrier");
  const bool exhaustive = transformation_count(n) <= 700;
  std::vector<PartialTransformation> sandwiches;
  if (exhaustive) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < 20; ++i) sandwiches.push_back(random_transformation(n, rng));
  }
  for (const PartialTransformation& a : sandwiches)
    if (predicted_class_multiset(type_of(a)) !=
        sim_classes(VariantSemigroup{a}, opt.max_exhaustive_degree).size_multiset()) {
      r.detail = "prediction misses at a=" + format_transformation(a);
      return r;
    }
  r.passed = true;
  r.detail = std::to_string(sandwiches.size()) +
             (exhaustive ? " sandwiches, exhaustive" : " sampled sandwiches" + seed_note(opt.seed));
  return r;
}

inline CheckResult check_type_roundtrip(int n, const VerifyOptions& opt) {
  CheckResult r = named("classification/type-roundtrip");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "fingerprints need the full carrier");
  const bool exhaustive = transformation_count(n) <= 700;
  std::vector<PartialTransformation> sandwiches;
  if (exhaustive) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    SplitMix64 rng(opt.seed);
    for (int i = 0; i < 50; ++i) sandwiches.push_back(random_transformation(n, rng));
  }
  for (const PartialTransformation& a : sandwiches)
    if (reconstruct_type(fingerprint(VariantSemigroup{a}, opt.max_exhaustive_degree)) !=
        type_of(a)) {
      r.detail = "recovered wrong type for a=" + format_transformation(a);
      return r;
    }
  r.passed = true;
  r.detail = std::to_string(sandwiches.size()) +
             (exhaustive ? " sandwiches, exhaustive" : " sampled sandwiches" + seed_note(opt.seed));
  return r;
}

inline CheckResult check_fingerprint_separation(int n, const VerifyOptions& opt) {
  CheckResult r = named("classification/fingerprint-separation");
  if (n > 3) return skipped(r.name, "pairwise sweep runs through degree 3 only");
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  std::vector<Fingerprint> prints;
  std::vector<TypeVector> types;
  prints.reserve(all.size());
  for (const PartialTransformation& a : all) {
    prints.push_back(fingerprint(VariantSemigroup{a}, opt.max_exhaustive_degree));
    types.push_back(type_of(a));
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++pairs;
      if ((types[i] == types[j]) != fingerprint_key_equal(prints[i], prints[j])) {
        r.detail = "separation fails for a=" + format_transformation(all[i]) +
                   ", b=" + format_transformation(all[j]);
        return r;
      }
    }
  r.passed = true;
  r.detail = std::to_string(pairs) + " unordered pairs, exhaustive";
  return r;
}

inline CheckResult check_iso_construction(int n, const VerifyOptions& opt) {
  CheckResult r = named("classification/isomorphism-construction");
  if (n > opt.max_exhaustive_degree)
    return skipped(r.name, "same-type sampling needs the full carrier");
  SplitMix64 rng(opt.seed);
  const auto groups = indices_by_type(n);

  std::vector<std::pair<PartialTransformation, PartialTransformation>> pairs;
  for (const TypeVector& t : enumerate_types(n)) {
    const PartialTransformation rep = canonical_rep(t);
    pairs.emplace_back(rep, rep);
  }
  const std::uint64_t carrier = transformation_count(n);
  for (int i = 0; i < 50; ++i) {
    const PartialTransformation a = nth_transformation(n, rng.below(carrier));
    const std::vector<std::uint64_t>& mates = groups.at(type_of(a));
    const PartialTransformation b = nth_transformation(n, mates[rng.below(mates.size())]);
    pairs.emplace_back(a, b);
  }

  const bool exhaustive_pairs = carrier <= 9;
  std::vector<PartialTransformation> all;
  if (exhaustive_pairs) all = enumerate_all(n, opt.max_exhaustive_degree);
  for (const auto& [a, b] : pairs) {
    const std::optional<IsoWitness> w = build_isomorphism(a, b);
    if (!w || !witness_consistent(*w)) {
      r.detail = "no valid witness for a=" + format_transformation(a) +
                 ", b=" + format_transformation(b);
      return r;
    }
    const VariantSemigroup va{a}, vb{b};
    const auto homomorphic = [&](const PartialTransformation& x, const PartialTransformation& y) {
      return apply_iso(*w, sandwich_product(va, x, y)) ==
             sandwich_product(vb, apply_iso(*w, x), apply_iso(*w, y));
    };
    if (exhaustive_pairs) {
      for (const PartialTransformation& x : all)
        for (const PartialTransformation& y : all)
          if (!homomorphic(x, y)) {
            r.detail = "homomorphism fails for a=" + format_transformation(a) +
                       ", b=" + format_transformation(b);
            return r;
          }
    } else {
      for (int i = 0; i < 2000; ++i)
        if (!homomorphic(random_transformation(n, rng), random_transformation(n, rng))) {
          r.detail = "homomorphism fails for a=" + format_transformation(a) +
                     ", b=" + format_transformation(b) + seed_note(opt.seed);
          return r;
        }
    }
  }
  r.passed = true;
  r.detail = std::to_string(pairs.size()) + " witnessed pairs, " +
             (exhaustive_pairs ? "exhaustive product check" : "2000 sampled products each") +
             seed_note(opt.seed);
  return r;
}

inline CheckResult check_class_transport(int n, const VerifyOptions& opt) {
  CheckResult r = named("classification/class-transport");
  if (n > 2) return skipped(r.name, "exhaustive transport runs at degree 2 only");
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  std::uint64_t witnesses = 0;
  for (const PartialTransformation& a : all)
    for (const PartialTransformation& b : all) {
      if (type_of(a) != type_of(b)) continue;
      const std::optional<IsoWitness> w = build_isomorphism(a, b);
      if (!w) {
        r.detail = "same-type pair rejected: a=" + format_transformation(a) +
                   ", b=" + format_transformation(b);
        return r;
      }
      ++witnesses;
      const SimClassPartition pa = sim_classes(VariantSemigroup{a}, opt.max_exhaustive_degree);
      std::map<PartialTransformation, std::vector<PartialTransformation>> pb;
      for (const SimClass& c : sim_classes(VariantSemigroup{b}, opt.max_exhaustive_degree).classes)
        pb[c.key] = c.members;
      for (const SimClass& c : pa.classes) {
        std::vector<PartialTransformation> image;
        image.reserve(c.members.size());
        for (const PartialTransformation& x : c.members) image.push_back(apply_iso(*w, x));
        std::sort(image.begin(), image.end());
        const PartialTransformation target_key = compose(image.front(), b);
        if (pb.at(target_key) != image) {
          r.detail = "class of " + format_transformation(c.members.front()) +
                     " not carried onto a single class (a=" + format_transformation(a) +
                     ", b=" + format_transformation(b) + ")";
          return r;
        }
      }
    }
  r.passed = true;
  r.detail = std::to_string(witnesses) + " same-type pairs, exhaustive transport";
  return r;
}

inline CheckResult check_type_counting(int n, const VerifyOptions& opt) {
  CheckResult r = named("classification/type-counting");
  if (n > opt.max_exhaustive_degree) return skipped(r.name, "grouping needs the full carrier");
  const std::uint64_t listed = enumerate_types(n).size();
  const std::uint64_t counted = count_variants(n);
  const std::uint64_t observed = indices_by_type(n).size();
  if (listed != counted || counted != observed) {
    r.detail = "listed " + std::to_string(listed) + ", formula " + std::to_string(counted) +
               ", observed " + std::to_string(observed);
    return r;
  }
  r.passed = true;
  r.detail = std::to_string(counted) + " types, all three counts agree";
  return r;
}

inline CheckResult check_canonical_reps(int n, const VerifyOptions&) {
  CheckResult r = named("classification/canonical-reps");
  if (n > 15) return skipped(r.name, "degree too large");
  std::uint64_t reps = 0;
  for (const TypeVector& t : enumerate_types(n)) {
    ++reps;
    if (type_of(canonical_rep(t)) != t) {
      r.detail = "representative of " + format_type(t) + " has the wrong type";
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(reps) + " representatives re-typed";
  return r;
}

inline CheckResult check_table_agreement(int n, const VerifyOptions& opt) {
  CheckResult r = named("oracle/table-agreement");
  if (n > kMaxTableDegree) return skipped(r.name, "tables capped at degree 3");
  std::vector<PartialTransformation> sandwiches;
  if (n <= 2) {
    sandwiches = enumerate_all(n, opt.max_exhaustive_degree);
  } else {
    for (const TypeVector& t : enumerate_types(n)) sandwiches.push_back(canonical_rep(t));
  }
  for (const PartialTransformation& a : sandwiches) {
    const VariantSemigroup v{a};
    const TableFingerprint abstract = fingerprint_of_table(cayley_table(v));
    const Fingerprint concrete = fingerprint(v, opt.max_exhaustive_degree);
    if (!abstract.zero || abstract.left_count != concrete.left_count ||
        abstract.right_count != concrete.right_count ||
        abstract.two_sided_count != concrete.two_sided_count ||
        abstract.class_sizes != concrete.class_sizes) {
      r.detail = "table and carrier fingerprints disagree at a=" + format_transformation(a);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(sandwiches.size()) + " variant tables" +
             (n <= 2 ? ", exhaustive" : ", canonical representatives");
  return r;
}

inline CheckResult check_oracle_pairs(int n, const VerifyOptions& opt) {
  CheckResult r = named("oracle/pairwise-search");
  if (n > 2) return skipped(r.name, "pairwise search runs at degree 2 only");
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  std::vector<CayleyTable> tables;
  tables.reserve(all.size());
  for (const PartialTransformation& a : all) tables.push_back(cayley_table(VariantSemigroup{a}));
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++pairs;
      const IsoSearchResult result =
          brute_force_isomorphic(tables[i], tables[j], opt.node_budget);
      if (result.outcome == IsoSearchResult::Outcome::budget_exceeded) {
        r.detail = "budget exhausted on pair " + format_transformation(all[i]) + " / " +
                   format_transformation(all[j]);
        return r;
      }
      const bool same_type = type_of(all[i]) == type_of(all[j]);
      if ((result.outcome == IsoSearchResult::Outcome::isomorphic) != same_type) {
        r.detail = "verdict disagrees with types on pair " + format_transformation(all[i]) +
                   " / " + format_transformation(all[j]);
        return r;
      }
      if (result.outcome == IsoSearchResult::Outcome::isomorphic &&
          !verify_isomorphism(tables[i], tables[j], result.witness)) {
        r.detail = "returned witness fails verification on pair " +
                   format_transformation(all[i]) + " / " + format_transformation(all[j]);
        return r;
      }
    }
  r.passed = true;
  r.detail = std::to_string(pairs) + " unordered variant pairs, all verdicts match types";
  return r;
}

inline CheckResult check_relabel_witnesses(int n, const VerifyOptions& opt) {
  CheckResult r = named("oracle/witness-relabeling");
  if (n > 2) return skipped(r.name, "relabeling sweep runs at degree 2 only");
  SplitMix64 rng(opt.seed);
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  for (const PartialTransformation& a : all) {
    const CayleyTable table = cayley_table(VariantSemigroup{a});
    const int m = table.order();
    std::vector<int> shuffle(m);
    for (int i = 0; i < m; ++i) shuffle[i] = i;
    for (int i = m - 1; i > 0; --i)
      std::swap(shuffle[i], shuffle[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<std::string> labels(m);
    std::vector<int> products(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      labels[shuffle[i]] = table.label(i);
      for (int j = 0; j < m; ++j)
        products[static_cast<std::size_t>(shuffle[i]) * m + shuffle[j]] =
            shuffle[table.product(i, j)];
    }
    const CayleyTable relabeled(std::move(labels), std::move(products));
    const IsoSearchResult result = brute_force_isomorphic(table, relabeled, opt.node_budget);
    if (result.outcome != IsoSearchResult::Outcome::isomorphic ||
        !verify_isomorphism(table, relabeled, result.witness)) {
      r.detail = "search failed to re-identify a relabeled table (a=" + format_transformation(a) +
                 ")" + seed_note(opt.seed);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(all.size()) + " relabeled tables re-identified" + seed_note(opt.seed);
  return r;
}

inline CheckResult check_fingerprint_invariance(int n, const VerifyOptions& opt) {
  CheckResult r = named("oracle/fingerprint-invariance");
  if (n > 2) return skipped(r.name, "runs at degree 2 only");
  const std::vector<PartialTransformation> all = enumerate_all(n, opt.max_exhaustive_degree);
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (type_of(all[i]) != type_of(all[j])) continue;
      const CayleyTable ta = cayley_table(VariantSemigroup{all[i]});
      const CayleyTable tb = cayley_table(VariantSemigroup{all[j]});
      const IsoSearchResult result = brute_force_isomorphic(ta, tb, opt.node_budget);
      if (result.outcome != IsoSearchResult::Outcome::isomorphic ||
          !verify_isomorphism(ta, tb, result.witness)) {
        r.detail = "no verified witness for a same-type pair";
        return r;
      }
      ++checked;
      if (fingerprint_of_table(ta) != fingerprint_of_table(tb)) {
        r.detail = "fingerprints differ across a verified isomorphism (" +
                   format_transformation(all[i]) + " / " + format_transformation(all[j]) + ")";
        return r;
      }
    }
  r.passed = true;
  r.detail = std::to_string(checked) + " isomorphic pairs, fingerprints invariant";
  return r;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(int n, const VerifyOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<CheckResult> results;
  results.push_back(detail::check_sandwich_associativity(n, options));
  results.push_back(detail::check_similarity_criterion(n, options));
  results.push_back(detail::check_annihilator_census(n, options));
  results.push_back(detail::check_class_partition(n, options));
  results.push_back(detail::check_class_size_formula(n, options));
  results.push_back(detail::check_predicted_multiset(n, options));
  results.push_back(detail::check_type_roundtrip(n, options));
  results.push_back(detail::check_fingerprint_separation(n, options));
  results.push_back(detail::check_iso_construction(n, options));
  results.push_back(detail::check_class_transport(n, options));
  results.push_back(detail::check_type_counting(n, options));
  results.push_back(detail::check_canonical_reps(n, options));
  results.push_back(detail::check_table_agreement(n, options));
  results.push_back(detail::check_oracle_pairs(n, options));
  results.push_back(detail::check_relabel_witnesses(n, options));
  results.push_back(detail::check_fingerprint_invariance(n, options));
  return results;
}

}  // namespace ptv
