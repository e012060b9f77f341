#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permprim/perm.hpp"

namespace permprim {

// Distinct parts that are pairwise coprime.  Parts equal to 1 are coprime to
// everything, but two 1s fail distinctness.
inline bool is_distinct_relatively_prime(const PartitionOfD& partition) {
  const std::vector<int>& parts = partition.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (parts[i] == parts[j]) return false;
      if (std::gcd(parts[i], parts[j]) != 1) return false;
    }
  return true;
}

// Witness that d = m*k and the parts split into k groups, each summing to m.
// groups holds 0-based indices into the part list the certificate was built from.
struct MPartitionCertificate {
  int m = 0;
  int k = 0;
  std::vector<std::vector<int>> groups;

  friend bool operator==(const MPartitionCertificate&, const MPartitionCertificate&) = default;
};

// Witness that m divides both d and the largest part, and the remaining parts
// split into k groups each summing to m.  largest_part_index and the group
// entries are 0-based indices into the originating part list.
struct SpecialMPartitionCertificate {
  int m = 0;
  int k = 0;
  int largest_part_index = 0;
  std::vector<std::vector<int>> groups;

  friend bool operator==(const SpecialMPartitionCertificate&,
                         const SpecialMPartitionCertificate&) = default;
};

namespace detail {

inline bool parts_are_distinct(const std::vector<int>& parts) {
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// Splits the parts at the given indices into `k` groups each summing to `m`.
// Deterministic: items are taken largest value first and tried against groups in
// order; a group is skipped when it has the same residual capacity as the one
// just tried (placing there would retrace a relabelled attempt).
inline std::optional<std::vector<std::vector<int>>> split_into_equal_groups(
    const std::vector<int>& parts, std::vector<int> indices, int m, int k) {
  if (k <= 0) return std::nullopt;
  long long total = 0;
  for (int idx : indices) total += parts[static_cast<std::size_t>(idx)];
  if (total != static_cast<long long>(m) * k) return std::nullopt;
  for (int idx : indices)
    if (parts[static_cast<std::size_t>(idx)] > m) return std::nullopt;
  if (static_cast<int>(indices.size()) < k) return std::nullopt;

  std::sort(indices.begin(), indices.end(), [&](int a, int b) {
    return parts[static_cast<std::size_t>(a)] > parts[static_cast<std::size_t>(b)];
  });

  std::vector<int> sums(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
  auto place = [&](auto&& self, std::size_t item) -> bool {
    if (item == indices.size()) return true;
    const int value = parts[static_cast<std::size_t>(indices[item])];
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g > 0 && sums[g] == sums[g - 1]) continue;
      if (sums[g] + value > m) continue;
      sums[g] += value;
      groups[g].push_back(indices[item]);
      if (self(self, item + 1)) return true;
      sums[g] -= value;
      groups[g].pop_back();
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  for (auto& group : groups) std::sort(group.begin(), group.end());
  return groups;
}

}  // namespace detail

// First m-partition in the deterministic search order (divisors of d ascending),
// or nullopt.  Requires distinct parts; a partition with one part has none.
inline std::optional<MPartitionCertificate> find_m_partition(const PartitionOfD& partition) {
  const std::vector<int>& parts = partition.parts();
  if (!detail::parts_are_distinct(parts))
    throw std::invalid_argument("find_m_partition requires distinct parts");
  const int d = partition.degree();
  const int l = static_cast<int>(parts.size());
  std::vector<int> all(parts.size());
  std::iota(all.begin(), all.end(), 0);
  for (int m = 2; m < d; ++m) {
    if (d % m != 0) continue;
    const int k = d / m;
    if (!(1 < k && k < l)) continue;
    if (auto groups = detail::split_into_equal_groups(parts, all, m, k))
      return MPartitionCertificate{m, k, std::move(*groups)};
  }
  return std::nullopt;
}

// First special m-partition, or nullopt.  m runs ascending over common divisors
// of d and the largest part with 1 < m < largest; the remaining parts must split
// into k groups of sum m.  Default semantics accept any k >= 1; strict_k_range
// additionally demands 1 < k < l-1.
inline std::optional<SpecialMPartitionCertificate> find_special_m_partition(
    const PartitionOfD& partition, bool strict_k_range = false) {
  const std::vector<int>& parts = partition.parts();
  if (!detail::parts_are_distinct(parts))
    throw std::invalid_argument("find_special_m_partition requires distinct parts");
  const int d = partition.degree();
  const int l = static_cast<int>(parts.size());
  const int largest_index = static_cast<int>(
      std::max_element(parts.begin(), parts.end()) - parts.begin());
  const int largest = parts[static_cast<std::size_t>(largest_index)];

  std::vector<int> rest;
  for (int i = 0; i < l; ++i)
    if (i != largest_index) rest.push_back(i);

  for (int m = 2; m < largest; ++m) {
    if (d % m != 0 || largest % m != 0) continue;
    const int k = (d - largest) / m;
    if (k < 1) continue;
    if (strict_k_range && !(1 < k && k < l - 1)) continue;
    if (auto groups = detail::split_into_equal_groups(parts, rest, m, k))
      return SpecialMPartitionCertificate{m, k, largest_index, std::move(*groups)};
  }
  return std::nullopt;
}

// Exhaustive cross-check: do the parts admit a split into exactly k groups each
// summing to m?  Enumerates every set partition (restricted growth strings) with
// no shared pruning logic; refuses more than 12 parts.
inline bool oracle_grouping_exists(const std::vector<int>& parts, int m, int k) {
  if (parts.size() > 12)
    throw std::invalid_argument("oracle_grouping_exists handles at most 12 parts");
  if (parts.empty()) return k == 0;
  if (k < 1 || k > static_cast<int>(parts.size())) return false;

  std::vector<int> assignment(parts.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t i, int classes_used) -> bool {
    if (i == parts.size()) {
      if (classes_used != k) return false;
      std::vector<long long> sums(static_cast<std::size_t>(k), 0);
      for (std::size_t j = 0; j < parts.size(); ++j)
        sums[static_cast<std::size_t>(assignment[j])] += parts[j];
      for (long long s : sums)
        if (s != m) return false;
      return true;
    }
    for (int c = 0; c <= classes_used && c < k; ++c) {
      assignment[i] = c;
      if (self(self, i + 1, std::max(classes_used, c + 1))) return true;
    }
    return false;
  };
  return enumerate(enumerate, 0, 0);
}

// Re-derives every invariant of a found certificate from scratch.
inline bool verify_m_partition_certificate(const PartitionOfD& partition,
                                           const MPartitionCertificate& cert) {
  const std::vector<int>& parts = partition.parts();
  const int d = partition.degree();
  const int l = static_cast<int>(parts.size());
  if (cert.m <= 1 || cert.m >= d) return false;
  if (static_cast<long long>(cert.m) * cert.k != d) return false;
  if (!(1 < cert.k && cert.k < l)) return false;
  if (static_cast<int>(cert.groups.size()) != cert.k) return false;
  std::vector<char> covered(parts.size(), 0);
  for (const auto& group : cert.groups) {
    if (group.empty()) return false;
    long long sum = 0;
    for (int idx : group) {
      if (idx < 0 || idx >= l || covered[static_cast<std::size_t>(idx)]) return false;
      covered[static_cast<std::size_t>(idx)] = 1;
      sum += parts[static_cast<std::size_t>(idx)];
    }
    if (sum != cert.m) return false;
  }
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

inline bool verify_special_m_partition_certificate(const PartitionOfD& partition,
                                                   const SpecialMPartitionCertificate& cert,
                                                   bool strict_k_range = false) {
  const std::vector<int>& parts = partition.parts();
  const int d = partition.degree();
  const int l = static_cast<int>(parts.size());
  if (cert.largest_part_index < 0 || cert.largest_part_index >= l) return false;
  const int largest = parts[static_cast<std::size_t>(cert.largest_part_index)];
  for (int part : parts)
    if (part > largest) return false;
  if (cert.m <= 1 || cert.m >= largest) return false;
  if (largest % cert.m != 0 || d % cert.m != 0) return false;
  if (static_cast<long long>(cert.m) * cert.k != d - largest) return false;
  if (cert.k < 1) return false;
  if (strict_k_range && !(1 < cert.k && cert.k < l - 1)) return false;
  if (static_cast<int>(cert.groups.size()) != cert.k) return false;
  std::vector<char> covered(parts.size(), 0);
  covered[static_cast<std::size_t>(cert.largest_part_index)] = 1;
  for (const auto& group : cert.groups) {
    if (group.empty()) return false;
    long long sum = 0;
    for (int idx : group) {
      if (idx < 0 || idx >= l || covered[static_cast<std::size_t>(idx)]) return false;
      covered[static_cast<std::size_t>(idx)] = 1;
      sum += parts[static_cast<std::size_t>(idx)];
    }
    if (sum != cert.m) return false;
  }
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

// Combined analysis of one partition.  distinct and relatively_prime are
// independent checks; both together make the partition relatively prime in the
// strong sense.  The certificate searches only run on distinct parts; they stay
// empty otherwise (the definitions presuppose distinctness, coprimality is not
// required for them).
struct PartitionClass {
  bool distinct = false;
  bool relatively_prime = false;
  std::optional<MPartitionCertificate> m_partition;
  std::optional<SpecialMPartitionCertificate> special_m_partition;
};

inline PartitionClass classify_parts(const PartitionOfD& partition,
                                     bool strict_defs = false) {
  PartitionClass result;
  const std::vector<int>& parts = partition.parts();
  result.distinct = detail::parts_are_distinct(parts);
  result.relatively_prime = true;
  for (std::size_t i = 0; i < parts.size() && result.relatively_prime; ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (std::gcd(parts[i], parts[j]) != 1) {
        result.relatively_prime = false;
        break;
      }
  if (result.distinct) {
    result.m_partition = find_m_partition(partition);
    result.special_m_partition = find_special_m_partition(partition, strict_defs);
  }
  return result;
}

}  // namespace permprim
