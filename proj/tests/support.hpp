// Shared helpers for the test suites: seeded randomness and independent
// brute-force oracles (element closure, exhaustive block search).

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "permprim/group.hpp"
#include "permprim/perm.hpp"

namespace testsupport {

inline std::vector<int> image_table(const permprim::Permutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) image[static_cast<std::size_t>(i) - 1] = p(i);
  return image;
}

inline permprim::Permutation random_permutation(std::mt19937& rng, int degree) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return permprim::Permutation(degree, std::move(image));
}

inline permprim::Permutation random_transposition(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> pick(1, degree);
  const int a = pick(rng);
  int b = pick(rng);
  while (b == a) b = pick(rng);
  std::vector<int> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 1);
  std::swap(image[static_cast<std::size_t>(a) - 1], image[static_cast<std::size_t>(b) - 1]);
  return permprim::Permutation(degree, std::move(image));
}

// Full element list by breadth-first closure under left multiplication.
// Throws when the group exceeds cap, so misuse fails loudly.
inline std::vector<permprim::Permutation> closure_elements(const permprim::GeneratorSet& g,
                                                           std::size_t cap = 1000000) {
  std::set<std::vector<int>> seen;
  std::vector<permprim::Permutation> elements{permprim::Permutation(g.degree())};
  seen.insert(image_table(elements.front()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const permprim::Permutation& gen : g.generators()) {
      permprim::Permutation next = compose(gen, elements[i]);
      if (seen.insert(image_table(next)).second) {
        if (elements.size() >= cap) throw std::runtime_error("closure exceeded cap");
        elements.push_back(std::move(next));
      }
    }
  return elements;
}

// Is the subset (given as a bitmask over points 1..d) a block for every listed
// element: each image is either equal to or disjoint from the subset.
inline bool is_block_mask(const std::vector<permprim::Permutation>& elements, int degree,
                          unsigned long long mask) {
  for (const permprim::Permutation& gamma : elements) {
    unsigned long long image = 0;
    for (int x = 1; x <= degree; ++x)
      if (mask & (1ull << (x - 1))) image |= 1ull << (gamma(x) - 1);
    if (image != mask && (image & mask) != 0) return false;
  }
  return true;
}

// Minimal block containing {a, b}: the smallest subset that contains both and
// is a block for the whole element list.  Exhaustive over all 2^d subsets.
inline std::vector<int> oracle_minimal_block(const std::vector<permprim::Permutation>& elements,
                                             int degree, int a, int b) {
  if (degree > 20) throw std::runtime_error("oracle_minimal_block is exhaustive; keep d small");
  const unsigned long long seed = (1ull << (a - 1)) | (1ull << (b - 1));
  unsigned long long best = 0;
  int best_size = degree + 1;
  for (unsigned long long mask = 0; mask < (1ull << degree); ++mask) {
    if ((mask & seed) != seed) continue;
    const int size = __builtin_popcountll(mask);
    if (size >= best_size) continue;
    if (is_block_mask(elements, degree, mask)) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<int> block;
  for (int x = 1; x <= degree; ++x)
    if (best & (1ull << (x - 1))) block.push_back(x);
  return block;
}

}  // namespace testsupport
