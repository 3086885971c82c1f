#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace ptv {

/// Multiset of unsigned values, stored as value -> multiplicity.  Map
/// equality is multiset equality, and iteration is in ascending value
/// order, so printed forms are deterministic.
using Multiset = std::map<std::uint64_t, std::uint64_t>;

inline std::uint64_t multiset_cardinality(const Multiset& m) {
  std::uint64_t total = 0;
  for (const auto& [value, count] : m) total += count;
  return total;
}

inline std::uint64_t multiset_sum(const Multiset& m) {
  std::uint64_t total = 0;
  for (const auto& [value, count] : m) total += value * count;
  return total;
}

/// Formats as "{1, 2^2, 4}": ascending values, "^k" for multiplicities > 1.
inline std::string format_multiset(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [value, count] : m) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(value);
    if (count > 1) {
      out += '^';
      out += std::to_string(count);
    }
  }
  out += '}';
  return out;
}

}  // namespace ptv
