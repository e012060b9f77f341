#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permprim/group.hpp"
#include "permprim/partition.hpp"
#include "permprim/perm.hpp"
#include "permprim/theorem.hpp"

namespace permprim {

// What the test suites assert about a catalog group.  order and block_system
// are present where a reference value was pinned down.
struct CatalogExpectation {
  bool transitive = true;
  bool primitive = false;
  std::optional<GroupOrder> order;
  std::optional<BlockSystem> block_system;
  VerdictTag verdict_of_first_generator = VerdictTag::NotCoveredSingleCycle;
};

struct CatalogEntry {
  std::string name;
  int degree;
  GeneratorSet generators;
  CatalogExpectation expected;
};

namespace detail {

inline GeneratorSet parse_generators(int degree, const std::vector<std::string>& texts) {
  std::vector<Permutation> gens;
  gens.reserve(texts.size());
  for (const std::string& text : texts) gens.push_back(parse_permutation(text, degree));
  return GeneratorSet(std::move(gens));
}

inline std::string run_cycle(int from, int to) {
  std::string out = "(";
  for (int x = from; x <= to; ++x) {
    if (x > from) out += ' ';
    out += std::to_string(x);
  }
  return out + ")";
}

inline BlockSystem interval_blocks(const std::vector<std::pair<int, int>>& ranges) {
  BlockSystem system;
  for (auto [from, to] : ranges) {
    std::vector<int> block;
    for (int x = from; x <= to; ++x) block.push_back(x);
    system.blocks.push_back(std::move(block));
  }
  return system;
}

// Family entries: a long cycle plus one completing generator.  For even d the
// cycle moves 2..d; for odd d = 2k+1 with k > 3 it splits as (1..k-1)(k..2k)
// with 2k+1 fixed, and the completing generator ties the three orbits together
// (a 4-cycle hits one point of each and is odd; the 3-cycle version is even).
// d in {3, 5, 7} falls back to a single d-cycle.
inline CatalogEntry sym_or_alt_entry(const std::string& name, int d, bool alternating) {
  std::string alpha;
  VerdictTag verdict;
  std::string beta;
  if (d >= 4 && d % 2 == 0) {
    alpha = run_cycle(2, d);
    beta = alternating ? "(1 2)(3 4)" : "(1 2)";
    verdict = VerdictTag::QualifiesL2;
  } else if (d == 3 || d == 5 || d == 7) {
    alpha = run_cycle(1, d);
    beta = alternating ? "(1 2 3)" : "(1 2)";
    verdict = VerdictTag::NotCoveredSingleCycle;
  } else if (d >= 9 && d % 2 == 1) {
    const int k = (d - 1) / 2;
    alpha = run_cycle(1, k - 1) + run_cycle(k, 2 * k);
    beta = alternating
               ? "(1 " + std::to_string(k) + " " + std::to_string(2 * k + 1) + ")"
               : "(1 " + std::to_string(k) + " " + std::to_string(2 * k) + " " +
                     std::to_string(2 * k + 1) + ")";
    // parts [1, k-1, k+1]: coprime exactly when k is even, and then no grouping
    // by a divisor of an odd d exists
    verdict = k % 2 == 0 ? VerdictTag::QualifiesL3Plus : VerdictTag::FailsDistinctOrCoprime;
  } else {
    throw std::invalid_argument("no symmetric/alternating construction for degree " +
                                std::to_string(d));
  }
  CatalogExpectation expected;
  expected.transitive = true;
  expected.primitive = true;
  expected.order = alternating ? factorial(d) / 2 : factorial(d);
  expected.verdict_of_first_generator = verdict;
  return CatalogEntry{name, d, parse_generators(d, {alpha, beta}), std::move(expected)};
}

}  // namespace detail

inline std::vector<std::string> list_entries() {
  std::vector<std::string> names = {"ex4_1_G1", "ex4_1_G2", "ex4_2_G1", "ex4_2_G2",
                                    "m12",      "m24",      "psl_2_7"};
  for (int d = 3; d <= 12; ++d) {
    names.push_back("sym(" + std::to_string(d) + ")");
    names.push_back("alt(" + std::to_string(d) + ")");
  }
  return names;
}

inline CatalogEntry entry(const std::string& name) {
  using detail::interval_blocks;
  using detail::parse_generators;

  const std::string alpha_10 = "(1 2)(3 4 5)(6 7 8 9 10)";
  const std::string alpha_30 =
      "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25)(26 27)(28 29 30)";

  if (name == "ex4_1_G1") {
    CatalogExpectation expected;
    expected.primitive = true;
    expected.order = GroupOrder(3628800);  // 10!
    expected.verdict_of_first_generator = VerdictTag::FailsMPartition;
    return {name, 10, parse_generators(10, {alpha_10, "(2 3)(5 6)"}), std::move(expected)};
  }
  if (name == "ex4_1_G2") {
    CatalogExpectation expected;
    expected.primitive = false;
    expected.order = GroupOrder(28800);  // (5!)^2 * 2
    expected.block_system = interval_blocks({{1, 5}, {6, 10}});
    expected.verdict_of_first_generator = VerdictTag::FailsMPartition;
    return {name, 10, parse_generators(10, {alpha_10, "(1 6)(2 7)(3 8)(4 9)(5 10)"}),
            std::move(expected)};
  }
  if (name == "ex4_2_G1") {
    CatalogExpectation expected;
    expected.primitive = true;
    expected.order = factorial(30);
    expected.verdict_of_first_generator = VerdictTag::FailsSpecialMPartition;
    return {name, 30, parse_generators(30, {alpha_30, "(25 26)(27 28)"}), std::move(expected)};
  }
  if (name == "ex4_2_G2") {
    CatalogExpectation expected;
    expected.primitive = false;
    expected.order = GroupOrder("2149908480000000");  // (5!)^6 * 6!
    BlockSystem system;
    for (int r = 1; r <= 5; ++r) {
      std::vector<int> block;
      for (int x = r; x <= 25; x += 5) block.push_back(x);
      system.blocks.push_back(std::move(block));
    }
    system.blocks.push_back({26, 27, 28, 29, 30});
    expected.block_system = std::move(system);
    expected.verdict_of_first_generator = VerdictTag::FailsSpecialMPartition;
    return {name, 30, parse_generators(30, {alpha_30, "(1 26)(6 27)(11 28)(16 29)(21 30)"}),
            std::move(expected)};
  }
  if (name == "m12") {
    CatalogExpectation expected;
    expected.primitive = true;
    expected.order = GroupOrder(95040);
    expected.verdict_of_first_generator = VerdictTag::QualifiesL2;
    return {name, 12,
            parse_generators(12, {"(1 2 3 5 6 8 9 11 10 7 4)", "(3 4)(6 7)(9 10)(11 12)"}),
            std::move(expected)};
  }
  if (name == "m24") {
    CatalogExpectation expected;
    expected.primitive = true;
    expected.order = GroupOrder(244823040);
    expected.verdict_of_first_generator = VerdictTag::QualifiesL2;
    return {name, 24,
            parse_generators(
                24,
                {"(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23)",
                 "(16 8 15 6 11 21 18 12 23 22 20)(4 7 13 2 3 5 9 17 10 19 14)",
                 "(24 1)(16 4)(8 14)(15 19)(6 10)(11 17)(21 9)(18 5)(12 3)(23 2)(22 13)(20 7)",
                 "(15 18 12 20 23)(21 11 8 6 22)(19 5 3 7 2)(9 17 14 10 13)"}),
            std::move(expected)};
  }
  if (name == "psl_2_7") {
    CatalogExpectation expected;
    expected.primitive = true;
    expected.order = GroupOrder(168);
    expected.verdict_of_first_generator = VerdictTag::QualifiesL2;
    return {name, 8,
            parse_generators(8, {"(1 2 3 4 5 6 7)", "(2 5 3)(4 6 7)", "(8 1)(2 4)(3 6)(5 7)"}),
            std::move(expected)};
  }

  for (const char* family : {"sym", "alt"}) {
    const std::string prefix = std::string(family) + "(";
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
        name.back() == ')') {
      const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed catalog name: " + name);
      if (digits.size() > 4) throw std::invalid_argument("catalog degree is too large");
      return detail::sym_or_alt_entry(name, std::stoi(digits), family == std::string("alt"));
    }
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace permprim
