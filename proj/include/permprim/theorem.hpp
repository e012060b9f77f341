#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permprim/group.hpp"
#include "permprim/partition.hpp"
#include "permprim/perm.hpp"

namespace permprim {

// Certificate that a candidate set cannot be a block of any transitive group
// containing alpha: alpha^exponent moves a_s out of the set but keeps a_t
// inside (it fixes a_t).  Cycle indices refer to the canonical decomposition.
struct LemmaWitness {
  std::size_t s_index = 0;
  std::size_t t_index = 0;
  Cycle s_cycle;
  Cycle t_cycle;
  long long exponent = 0;
  int a_s = 0;
  int a_t = 0;
};

// Searches cycle pairs (s, t) in canonical order for one where the set straddles
// cycle s (meets it, without covering it), meets cycle t, and the two cycle
// lengths are coprime.  With such a pair, some power of alpha whose exponent is
// a multiple of the t-length pushes a point of the set out of cycle s while
// fixing the chosen point of cycle t, so the set cannot be a block.
inline std::optional<LemmaWitness> lemma_witness(const Permutation& alpha,
                                                 const std::vector<int>& candidate_set) {
  const int d = alpha.degree();
  if (candidate_set.empty()) throw std::invalid_argument("candidate set is empty");
  std::vector<char> in_set(static_cast<std::size_t>(d), 0);
  int set_size = 0;
  for (int point : candidate_set) {
    if (point < 1 || point > d)
      throw std::invalid_argument("candidate set contains an out-of-range point");
    if (!in_set[static_cast<std::size_t>(point) - 1]) {
      in_set[static_cast<std::size_t>(point) - 1] = 1;
      ++set_size;
    }
  }
  if (set_size == d)
    throw std::invalid_argument("candidate set must be a proper subset of the points");

  const CycleDecomposition dec = cycle_decomposition(alpha);
  auto smallest_in_set = [&](const Cycle& c) -> int {
    for (int x : c.elements)  // canonical cycles start at their smallest element,
      if (in_set[static_cast<std::size_t>(x) - 1]) return x;  // but scan anyway
    return 0;
  };
  auto leaves_set = [&](const Cycle& c) -> bool {
    for (int x : c.elements)
      if (!in_set[static_cast<std::size_t>(x) - 1]) return true;
    return false;
  };

  for (std::size_t s = 0; s < dec.cycles.size(); ++s) {
    const Cycle& cs = dec.cycles[s];
    const int a_s = smallest_in_set(cs);
    if (a_s == 0 || !leaves_set(cs)) continue;  // need the set to straddle cycle s
    for (std::size_t t = 0; t < dec.cycles.size(); ++t) {
      if (t == s) continue;
      const Cycle& ct = dec.cycles[t];
      if (std::gcd(cs.length(), ct.length()) != 1) continue;
      const int a_t = smallest_in_set(ct);
      if (a_t == 0) continue;

      // gcd(n_s, n_t) = 1, so the multiples of n_t sweep the whole cycle of a_s;
      // the smallest multiplier that escapes the set gives the exponent.
      const long long n_t = ct.length();
      for (long long multiplier = 1; multiplier <= cs.length(); ++multiplier) {
        const long long exponent = n_t * multiplier;
        const Permutation alpha_e = power(alpha, exponent);
        if (!in_set[static_cast<std::size_t>(alpha_e(a_s)) - 1]) {
          LemmaWitness w;
          w.s_index = s;
          w.t_index = t;
          w.s_cycle = cs;
          w.t_cycle = ct;
          w.exponent = exponent;
          w.a_s = a_s;
          w.a_t = a_t;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

enum class VerdictTag {
  QualifiesL2,
  QualifiesL3Plus,
  NotCoveredSingleCycle,
  FailsDistinctOrCoprime,
  FailsMPartition,
  FailsSpecialMPartition,
};

inline const char* to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::QualifiesL2: return "QualifiesL2";
    case VerdictTag::QualifiesL3Plus: return "QualifiesL3Plus";
    case VerdictTag::NotCoveredSingleCycle: return "NotCoveredSingleCycle";
    case VerdictTag::FailsDistinctOrCoprime: return "FailsDistinctOrCoprime";
    case VerdictTag::FailsMPartition: return "FailsMPartition";
    case VerdictTag::FailsSpecialMPartition: return "FailsSpecialMPartition";
  }
  return "?";
}

// Outcome of testing a permutation against the primitivity criterion.  A
// qualifying verdict means: every transitive group containing the permutation
// is primitive.  Failing verdicts carry the certificate that blocked the claim.
struct GeneratorVerdict {
  VerdictTag tag;
  PartitionOfD partition;
  std::optional<MPartitionCertificate> m_certificate;
  std::optional<SpecialMPartitionCertificate> special_certificate;

  bool qualifies() const {
    return tag == VerdictTag::QualifiesL2 || tag == VerdictTag::QualifiesL3Plus;
  }
};

// The criterion: a cycle-type partition with at least two parts, distinct and
// pairwise coprime, that is neither an m-partition nor a special m-partition
// (the latter two checks are vacuous for exactly two parts).
inline GeneratorVerdict classify_generator(const Permutation& alpha,
                                           bool strict_defs = false) {
  PartitionOfD partition = partition_of(alpha);
  const std::size_t l = partition.size();
  if (l == 1)
    return {VerdictTag::NotCoveredSingleCycle, std::move(partition), {}, {}};
  if (!is_distinct_relatively_prime(partition))
    return {VerdictTag::FailsDistinctOrCoprime, std::move(partition), {}, {}};
  if (l == 2) return {VerdictTag::QualifiesL2, std::move(partition), {}, {}};
  if (auto cert = find_m_partition(partition))
    return {VerdictTag::FailsMPartition, std::move(partition), std::move(cert), {}};
  if (auto cert = find_special_m_partition(partition, strict_defs))
    return {VerdictTag::FailsSpecialMPartition, std::move(partition), {}, std::move(cert)};
  return {VerdictTag::QualifiesL3Plus, std::move(partition), {}, {}};
}

// Raises alpha to the product of all parts other than m, leaving a single
// m-cycle (everything else has order dividing that product, and coprimality
// keeps the m-cycle intact as a cycle).
inline Permutation extract_cycle_power(const Permutation& alpha, int m) {
  PartitionOfD partition = partition_of(alpha);
  if (!is_distinct_relatively_prime(partition))
    throw std::invalid_argument("extract_cycle_power needs a relatively prime cycle type");
  if (m < 2) throw std::invalid_argument("extract_cycle_power needs m >= 2");
  const std::vector<int>& parts = partition.parts();
  if (std::find(parts.begin(), parts.end(), m) == parts.end())
    throw std::invalid_argument("m is not a cycle length of this permutation");
  Permutation result = alpha;
  for (int part : parts)
    if (part != m) result = power(result, part);
  return result;
}

enum class GroupFamily { Symmetric, Alternating, Other };

inline const char* to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::Symmetric: return "Symmetric";
    case GroupFamily::Alternating: return "Alternating";
    case GroupFamily::Other: return "Other";
  }
  return "?";
}

// Order-based recognition: d! is the symmetric group, d!/2 the alternating one.
inline GroupFamily identify_sym_or_alt(const GeneratorSet& g,
                                       int degree_bound = kDefaultDegreeBound) {
  const GroupOrder order = group_order(g, degree_bound);
  const GroupOrder full = factorial(g.degree());
  if (order == full) return GroupFamily::Symmetric;
  if (order * 2 == full) return GroupFamily::Alternating;
  return GroupFamily::Other;
}

}  // namespace permprim
