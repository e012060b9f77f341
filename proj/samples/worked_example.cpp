// Walkthrough: one permutation whose cycle type has an m-partition, so the
// criterion stays silent, and indeed it sits in both a primitive and an
// imprimitive transitive group.

#include <iostream>

#include "permprim/group.hpp"
#include "permprim/report.hpp"
#include "permprim/theorem.hpp"

using namespace permprim;

int main() {
  const Permutation alpha = parse_permutation("(1 2)(3 4 5)(6 7 8 9 10)");

  for (const std::string& line : analyze_permutation(alpha).explanation)
    std::cout << line << "\n";

  const GeneratorSet primitive_group(
      {alpha, parse_permutation("(2 3)(5 6)", 10)});
  const GeneratorSet imprimitive_group(
      {alpha, parse_permutation("(1 6)(2 7)(3 8)(4 9)(5 10)", 10)});

  std::cout << "\nwith (2 3)(5 6):        order " << group_order(primitive_group).str()
            << ", primitive: " << (is_primitive(primitive_group) ? "yes" : "no") << "\n";
  std::cout << "with (1 6)(2 7)...(5 10): order " << group_order(imprimitive_group).str()
            << ", primitive: " << (is_primitive(imprimitive_group) ? "yes" : "no") << "\n";

  std::cout << "\nblock systems of the imprimitive group:\n";
  for (const BlockSystem& system : block_systems(imprimitive_group)) {
    for (const auto& block : system.blocks) {
      std::cout << " {";
      for (std::size_t i = 0; i < block.size(); ++i)
        std::cout << (i ? " " : "") << block[i];
      std::cout << "}";
    }
    std::cout << "\n";
  }

  // A candidate set that straddles the 3-cycle can never be a block.
  if (auto w = lemma_witness(alpha, {1, 2, 3}))
    std::cout << "\n{1 2 3} is ruled out as a block: alpha^" << w->exponent << " moves "
              << w->a_s << " out while fixing " << w->a_t << "\n";
  return 0;
}
