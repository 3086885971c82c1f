// Acceptance suite for the variant-classification library: exact
// combinatorial reproduction, one line per criterion, non-zero exit on any
// failure.  Brute-force sides are computed here from the definitions, so a
// defect in the library's closed forms cannot cancel out.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptv/ptv.hpp"

using namespace ptv;

namespace {

constexpr std::uint64_t kSeed = 987654321;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

// --- criterion 1: annihilator counts vs closed forms -------------------------

Outcome annihilator_counts() {
  Outcome out;
  std::uint64_t sandwiches = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<PartialTransformation> all = enumerate_all(n);
    for (const PartialTransformation& a : all) {
      ++sandwiches;
      const VariantSemigroup v{a};
      std::uint64_t left = 0, right = 0, two_sided = 0;
      for (const PartialTransformation& x : all) {
        bool is_left = true, is_right = true;
        for (const PartialTransformation& u : all) {
          if (is_left && !sandwich_product(v, x, u).is_zero()) is_left = false;
          if (is_right && !sandwich_product(v, u, x).is_zero()) is_right = false;
          if (!is_left && !is_right) break;
        }
        left += is_left;
        right += is_right;
        two_sided += is_left && is_right;
      }
      const TransformationStats stats = analyze(a);
      const AnnihilatorFormulas formulas = annihilator_formulas(n, stats.rank, stats.z);
      if (left != formulas.left || right != formulas.right || two_sided != formulas.two_sided) {
        out.fail("mismatch at n=" + std::to_string(n) + ", a=" + format_transformation(a));
        return out;
      }
    }
  }
  out.detail = std::to_string(sandwiches) +
               " sandwiches (n=1..3), counts by definition equal the closed forms";
  return out;
}

// --- criterion 2: class sizes from the product formula ------------------------

Outcome class_size_formula() {
  Outcome out;
  std::uint64_t classes_checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const std::vector<PartialTransformation> all = enumerate_all(n);
    for (const PartialTransformation& a : all) {
      const VariantSemigroup v{a};
      std::map<PartialTransformation, std::vector<PartialTransformation>> groups;
      for (const PartialTransformation& x : all) groups[compose(x, a)].push_back(x);
      if (groups.size() != ipow(analyze(a).rank + 1, n)) {
        out.fail("class count off at a=" + format_transformation(a));
        return out;
      }
      std::uint64_t total = 0;
      for (const auto& [key, members] : groups) {
        ++classes_checked;
        total += members.size();
        if (class_size(v, members.front()) != members.size()) {
          out.fail("formula misses the class of " + format_transformation(members.front()) +
                   " at a=" + format_transformation(a));
          return out;
        }
      }
      if (total != transformation_count(n)) {
        out.fail("sizes do not sum to the carrier at a=" + format_transformation(a));
        return out;
      }
    }
  }
  out.detail = std::to_string(classes_checked) +
               " classes across all sandwiches (n=2,3); sizes, counts, and sums exact";
  return out;
}

// --- criterion 3: variant counts by partition sums ----------------------------

Outcome variant_counts() {
  Outcome out;
  const std::vector<std::uint64_t> expected{2, 4, 7, 12, 19};
  for (int n = 1; n <= 5; ++n) {
    std::set<TypeVector> realized;
    const std::uint64_t carrier = transformation_count(n);
    for (std::uint64_t i = 0; i < carrier; ++i) realized.insert(type_of(nth_transformation(n, i)));
    const std::uint64_t counted = count_variants(n);
    if (counted != expected[n - 1] || realized.size() != expected[n - 1]) {
      out.fail("n=" + std::to_string(n) + ": partition sum " + std::to_string(counted) +
               ", observed " + std::to_string(realized.size()) + ", expected " +
               std::to_string(expected[n - 1]));
      return out;
    }
  }
  out.detail = "counts 2, 4, 7, 12, 19 for n=1..5, grouping 7776 elements at n=5";
  return out;
}

// --- criterion 4: same-type pairs get verified isomorphisms -------------------

Outcome isomorphism_construction() {
  Outcome out;
  SplitMix64 rng(kSeed);
  std::uint64_t witnesses = 0;
  for (int n = 1; n <= 3; ++n) {
    std::map<TypeVector, std::vector<std::uint64_t>> groups;
    const std::uint64_t carrier = transformation_count(n);
    for (std::uint64_t i = 0; i < carrier; ++i) groups[type_of(nth_transformation(n, i))].push_back(i);

    std::vector<std::pair<PartialTransformation, PartialTransformation>> pairs;
    for (const TypeVector& t : enumerate_types(n)) {
      const PartialTransformation rep = canonical_rep(t);
      pairs.emplace_back(rep, rep);
    }
    for (int i = 0; i < 50; ++i) {
      const PartialTransformation a = nth_transformation(n, rng.below(carrier));
      const std::vector<std::uint64_t>& mates = groups.at(type_of(a));
      pairs.emplace_back(a, nth_transformation(n, mates[rng.below(mates.size())]));
    }

    std::vector<PartialTransformation> all;
    if (n <= 2) all = enumerate_all(n);
    for (const auto& [a, b] : pairs) {
      const std::optional<IsoWitness> w = build_isomorphism(a, b);
      if (!w) {
        out.fail("no witness for same-type pair " + format_transformation(a) + " / " +
                 format_transformation(b));
        return out;
      }
      ++witnesses;
      // pointwise b = tau a pi, via the permutations directly
      for (int p = 1; p <= n; ++p) {
        const int through = w->tau(p);
        const int expected = b.image(p);
        const int got = a.defined(through) ? w->pi(a.image(through)) : 0;
        if (expected != got) {
          out.fail("witness is not pointwise correct for " + format_transformation(a) + " / " +
                   format_transformation(b));
          return out;
        }
      }
      const VariantSemigroup va{a}, vb{b};
      const auto multiplicative = [&](const PartialTransformation& x,
                                      const PartialTransformation& y) {
        return apply_iso(*w, sandwich_product(va, x, y)) ==
               sandwich_product(vb, apply_iso(*w, x), apply_iso(*w, y));
      };
      bool ok = true;
      if (n <= 2) {
        for (const PartialTransformation& x : all)
          for (const PartialTransformation& y : all) ok = ok && multiplicative(x, y);
      } else {
        for (int i = 0; i < 2000 && ok; ++i)
          ok = multiplicative(nth_transformation(n, rng.below(carrier)),
                              nth_transformation(n, rng.below(carrier)));
      }
      if (!ok) {
        out.fail("map is not multiplicative for " + format_transformation(a) + " / " +
                 format_transformation(b));
        return out;
      }
    }
  }
  out.detail = std::to_string(witnesses) +
               " witnessed pairs (n=1..3): pointwise equality and multiplicativity, exhaustive "
               "products at n<=2, 2000 sampled at n=3, seed " +
               std::to_string(kSeed);
  return out;
}

// --- criterion 5: fingerprints separate types; type recovery round-trips -------

Outcome fingerprint_separation_and_recovery() {
  Outcome out;
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<PartialTransformation> all = enumerate_all(n);
    std::vector<Fingerprint> prints;
    std::vector<TypeVector> types;
    for (const PartialTransformation& a : all) {
      prints.push_back(fingerprint(VariantSemigroup{a}));
      types.push_back(type_of(a));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (types[i] == types[j]) continue;
        ++pairs;
        if (fingerprint_key_equal(prints[i], prints[j])) {
          out.fail("distinct types share a fingerprint: " + format_transformation(all[i]) +
                   " / " + format_transformation(all[j]));
          return out;
        }
      }
  }
  std::uint64_t recovered = 0;
  for (int n = 1; n <= 4; ++n)
    for (const PartialTransformation& a : enumerate_all(n)) {
      ++recovered;
      if (reconstruct_type(fingerprint(VariantSemigroup{a})) != type_of(a)) {
        out.fail("type recovery misses at a=" + format_transformation(a));
        return out;
      }
    }
  out.detail = std::to_string(pairs) + " distinct-type pairs separated (n<=3); " +
               std::to_string(recovered) + " types recovered from fingerprints (n<=4)";
  return out;
}

// --- criterion 6: independent table-level search at degree 2 ------------------

Outcome oracle_pairwise_search() {
  Outcome out;
  const std::vector<PartialTransformation> all = enumerate_all(2);
  std::vector<CayleyTable> tables;
  for (const PartialTransformation& a : all) tables.push_back(cayley_table(VariantSemigroup{a}));
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++pairs;
      const IsoSearchResult r = brute_force_isomorphic(tables[i], tables[j]);
      if (r.outcome == IsoSearchResult::Outcome::budget_exceeded) {
        out.fail("budget exhausted on " + format_transformation(all[i]) + " / " +
                 format_transformation(all[j]));
        return out;
      }
      const bool same_type = type_of(all[i]) == type_of(all[j]);
      if ((r.outcome == IsoSearchResult::Outcome::isomorphic) != same_type) {
        out.fail("search verdict disagrees with types on " + format_transformation(all[i]) +
                 " / " + format_transformation(all[j]));
        return out;
      }
      if (same_type && !verify_isomorphism(tables[i], tables[j], r.witness)) {
        out.fail("witness fails verification on " + format_transformation(all[i]) + " / " +
                 format_transformation(all[j]));
        return out;
      }
    }
  out.detail = std::to_string(pairs) +
               " unordered variant pairs at n=2: verdicts match type equality, no budget "
               "exhaustion, all witnesses verified";
  return out;
}

// --- criterion 7: similarity criterion ----------------------------------------

Outcome similarity_criterion() {
  Outcome out;
  const std::vector<PartialTransformation> all2 = enumerate_all(2);
  std::uint64_t checked = 0;
  for (const PartialTransformation& a : all2) {
    const VariantSemigroup v{a};
    for (const PartialTransformation& x : all2)
      for (const PartialTransformation& y : all2) {
        ++checked;
        bool same_action = true;
        for (const PartialTransformation& u : all2)
          if (sandwich_product(v, x, u) != sandwich_product(v, y, u)) {
            same_action = false;
            break;
          }
        if (same_action != (compose(x, a) == compose(y, a))) {
          out.fail("criterion fails at a=" + format_transformation(a) +
                   ", x=" + format_transformation(x) + ", y=" + format_transformation(y));
          return out;
        }
      }
  }
  SplitMix64 rng(kSeed);
  const std::vector<PartialTransformation> all3 = enumerate_all(3);
  for (int i = 0; i < 500; ++i) {
    const VariantSemigroup v{all3[rng.below(all3.size())]};
    const PartialTransformation& x = all3[rng.below(all3.size())];
    const PartialTransformation& y = all3[rng.below(all3.size())];
    ++checked;
    bool same_action = true;
    for (const PartialTransformation& u : all3)
      if (sandwich_product(v, x, u) != sandwich_product(v, y, u)) {
        same_action = false;
        break;
      }
    if (same_action != (compose(x, v.sandwich) == compose(y, v.sandwich))) {
      out.fail("criterion fails at a=" + format_transformation(v.sandwich) + ", seed " +
               std::to_string(kSeed));
      return out;
    }
  }
  out.detail = std::to_string(checked) +
               " (a,x,y) triples: exhaustive at n=2, 500 sampled at n=3 (seed " +
               std::to_string(kSeed) + "), all quantified over every u";
  return out;
}

// --- criterion 8: classes transport onto classes -------------------------------

Outcome class_transport() {
  Outcome out;
  const std::vector<PartialTransformation> all = enumerate_all(2);
  std::uint64_t transported = 0;
  for (const PartialTransformation& a : all)
    for (const PartialTransformation& b : all) {
      if (type_of(a) != type_of(b)) continue;
      const std::optional<IsoWitness> w = build_isomorphism(a, b);
      if (!w) {
        out.fail("missing witness for " + format_transformation(a) + " / " +
                 format_transformation(b));
        return out;
      }
      std::map<PartialTransformation, std::set<PartialTransformation>> classes_a, classes_b;
      for (const PartialTransformation& x : all) {
        classes_a[compose(x, a)].insert(x);
        classes_b[compose(x, b)].insert(x);
      }
      for (const auto& [key, members] : classes_a) {
        ++transported;
        std::set<PartialTransformation> image;
        for (const PartialTransformation& x : members) image.insert(apply_iso(*w, x));
        if (classes_b.at(compose(*image.begin(), b)) != image) {
          out.fail("class image is not a single class for " + format_transformation(a) + " / " +
                   format_transformation(b));
          return out;
        }
      }
    }
  out.detail = std::to_string(transported) +
               " classes carried across all same-type pairs at n=2, each onto exactly one class";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {"annihilator counts match the closed forms", annihilator_counts},
      {"class sizes match the product formula", class_size_formula},
      {"variant counts equal partition sums", variant_counts},
      {"same-type pairs yield verified isomorphisms", isomorphism_construction},
      {"fingerprints separate types and recover them", fingerprint_separation_and_recovery},
      {"table-level search agrees with type equality", oracle_pairwise_search},
      {"similarity criterion holds", similarity_criterion},
      {"isomorphisms carry classes onto classes", class_transport},
  };

  std::cout << "acceptance: deformed-multiplication classification suite\n";
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = criteria[i].run();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    failed += outcome.passed ? 0 : 1;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << " [" << i + 1 << "/" << criteria.size()
              << "] " << criteria[i].name << ": " << outcome.detail << " (" << elapsed << " ms)\n";
  }
  if (failed == 0)
    std::cout << "all " << criteria.size() << " criteria passed\n";
  else
    std::cout << failed << " of " << criteria.size() << " criteria FAILED\n";
  return failed == 0 ? 0 : 1;
}
