#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permprim/perm.hpp"

namespace permprim {

using GroupOrder = boost::multiprecision::cpp_int;

// Orders up to 64! stay comfortably within cpp_int; the chain construction cost
// is what this bound actually guards.
inline constexpr int kDefaultDegreeBound = 64;

inline GroupOrder factorial(int n) {
  GroupOrder f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// A nonempty list of same-degree generators.  Exact duplicates are dropped
// (first occurrence kept); identity generators survive so the trivial group is
// representable.
class GeneratorSet {
public:
  explicit GeneratorSet(std::vector<Permutation> generators) {
    if (generators.empty())
      throw std::invalid_argument("a generator set needs at least one permutation");
    for (const Permutation& g : generators)
      if (g.degree() != generators.front().degree())
        throw std::invalid_argument("generators must share one degree");
    for (Permutation& g : generators)
      if (std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        generators_.push_back(std::move(g));
  }

  int degree() const { return generators_.front().degree(); }
  const std::vector<Permutation>& generators() const { return generators_; }

private:
  std::vector<Permutation> generators_;
};

// Sorted orbit of a point under the generated group.
inline std::vector<int> orbit(const GeneratorSet& g, int point) {
  const int d = g.degree();
  if (point < 1 || point > d) throw std::invalid_argument("orbit point out of range");
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::vector<int> frontier{point};
  seen[static_cast<std::size_t>(point) - 1] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const Permutation& gen : g.generators()) {
      const int image = gen(frontier[i]);
      if (!seen[static_cast<std::size_t>(image) - 1]) {
        seen[static_cast<std::size_t>(image) - 1] = 1;
        frontier.push_back(image);
      }
    }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

inline bool is_transitive(const GeneratorSet& g) {
  return static_cast<int>(orbit(g, 1).size()) == g.degree();
}

// Smallest block of the generated group containing both a and b, as a sorted
// vector.  Union-find congruence closure: seed a ~ b, then whenever a class
// representative is absorbed, merge the generator images of the absorbed point
// with those of its new representative until stable.
inline std::vector<int> minimal_block_containing(const GeneratorSet& g, int a, int b) {
  const int d = g.degree();
  if (a < 1 || a > d || b < 1 || b > d)
    throw std::invalid_argument("block seed point out of range");
  if (a == b) throw std::invalid_argument("block seed points must differ");
  if (!is_transitive(g))
    throw std::invalid_argument("minimal blocks are defined for transitive groups only");

  std::vector<int> parent(static_cast<std::size_t>(d) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<int> queue;
  auto merge = [&](int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rx > ry) std::swap(rx, ry);
    parent[static_cast<std::size_t>(ry)] = rx;  // smaller point stays representative
    queue.push_back(ry);
  };

  merge(a, b);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int absorbed = queue[qi];
    for (const Permutation& gen : g.generators())
      merge(gen(absorbed), gen(find(absorbed)));
  }

  std::vector<int> block;
  const int root = find(a);
  for (int x = 1; x <= d; ++x)
    if (find(x) == root) block.push_back(x);
  return block;
}

inline bool is_primitive(const GeneratorSet& g) {
  if (!is_transitive(g))
    throw std::invalid_argument("primitivity is defined for transitive groups only");
  const int d = g.degree();
  for (int b = 2; b <= d; ++b)
    if (static_cast<int>(minimal_block_containing(g, 1, b).size()) < d) return false;
  return true;
}

// A complete nontrivial block system: blocks sorted internally and ordered by
// first element; all blocks share one size dividing d.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

namespace detail {

// Expands one block to the full system by closing under the generators.
inline BlockSystem expand_block(const GeneratorSet& g, std::vector<int> seed) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  std::sort(seed.begin(), seed.end());
  known.insert(seed);
  frontier.push_back(std::move(seed));
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const Permutation& gen : g.generators()) {
      std::vector<int> image;
      image.reserve(frontier[i].size());
      for (int x : frontier[i]) image.push_back(gen(x));
      std::sort(image.begin(), image.end());
      if (known.insert(image).second) frontier.push_back(std::move(image));
    }
  BlockSystem system;
  system.blocks.assign(known.begin(), known.end());
  std::sort(system.blocks.begin(), system.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return system;
}

}  // namespace detail

// Every distinct nontrivial block system of the generated transitive group,
// ordered by block size then by the block containing 1.
inline std::vector<BlockSystem> block_systems(const GeneratorSet& g) {
  if (!is_transitive(g))
    throw std::invalid_argument("block systems are defined for transitive groups only");
  const int d = g.degree();
  std::vector<BlockSystem> systems;
  for (int b = 2; b <= d; ++b) {
    std::vector<int> block = minimal_block_containing(g, 1, b);
    if (static_cast<int>(block.size()) == d) continue;
    BlockSystem system = detail::expand_block(g, std::move(block));
    if (std::find(systems.begin(), systems.end(), system) == systems.end())
      systems.push_back(std::move(system));
  }
  std::sort(systems.begin(), systems.end(), [](const BlockSystem& x, const BlockSystem& y) {
    if (x.block_size() != y.block_size()) return x.block_size() < y.block_size();
    return x.blocks < y.blocks;
  });
  return systems;
}

// Deterministic stabilizer chain (Schreier-Sims).  Base points are the smallest
// moved points of the strong generators that create each level; transversal
// entries are fixed once written, so membership tests and the verification
// sweep stay stable while the chain grows.
class StabilizerChain {
public:
  explicit StabilizerChain(const GeneratorSet& g, int degree_bound = kDefaultDegreeBound)
      : degree_(g.degree()) {
    if (degree_ > degree_bound)
      throw std::invalid_argument("degree exceeds the stabilizer-chain bound");
    for (const Permutation& gen : g.generators()) sift_in(gen, 0);
    // Verify Schreier generators level by level until nothing new appears.
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = levels_.size(); i-- > 0;)
        if (verify_level(i)) grew = true;
    }
  }

  int degree() const { return degree_; }

  std::vector<int> base() const {
    std::vector<int> points;
    for (const Level& level : levels_) points.push_back(level.base_point);
    return points;
  }

  GroupOrder order() const {
    GroupOrder n = 1;
    for (const Level& level : levels_) n *= static_cast<unsigned>(level.orbit.size());
    return n;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    Permutation residue = p;
    for (const Level& level : levels_) {
      if (residue.is_identity()) return true;
      const auto& rep = level.transversal[static_cast<std::size_t>(residue(level.base_point)) - 1];
      if (!rep) return false;
      residue = compose(rep->inverse(), residue);
    }
    return residue.is_identity();
  }

private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;  // strong generators fixing all earlier base points
    std::vector<int> orbit;         // BFS order from base_point
    std::vector<std::optional<Permutation>> transversal;  // [x-1] maps base_point to x
    std::size_t verified_points = 0;  // Schreier pairs below (verified_points,
    std::size_t verified_gens = 0;    //  verified_gens) have identity residue
  };

  // Strips p through levels from `start`; returns the residue and the level at
  // which sifting stopped (levels_.size() when it ran the whole chain).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t start) const {
    std::size_t i = start;
    for (; i < levels_.size(); ++i) {
      if (p.is_identity()) return {std::move(p), levels_.size()};
      const Level& level = levels_[i];
      const auto& rep = level.transversal[static_cast<std::size_t>(p(level.base_point)) - 1];
      if (!rep) return {std::move(p), i};
      p = compose(rep->inverse(), p);
    }
    return {std::move(p), i};
  }

  // Sifts p from level `start`; installs the residue as a strong generator when
  // it is not the identity.  The residue fixes every base point above its drop
  // level, so it joins the generator lists of levels start..drop.
  void sift_in(const Permutation& p, std::size_t start) {
    auto [residue, drop] = strip(p, start);
    if (residue.is_identity()) return;
    if (drop == levels_.size()) {
      int base_point = 0;
      for (int x = 1; x <= degree_; ++x)
        if (residue(x) != x) {
          base_point = x;
          break;
        }
      Level level{base_point, {}, {}, std::vector<std::optional<Permutation>>(
                                          static_cast<std::size_t>(degree_)),
                  0, 0};
      level.orbit.push_back(base_point);
      level.transversal[static_cast<std::size_t>(base_point) - 1] = Permutation(degree_);
      levels_.push_back(std::move(level));
    }
    for (std::size_t l = 0; l <= drop; ++l) levels_[l].gens.push_back(residue);
    for (std::size_t l = 0; l <= drop; ++l) extend_orbit(l);
  }

  // Re-closes one level's orbit under its current generators.  Existing
  // transversal entries are never rewritten.
  void extend_orbit(std::size_t li) {
    Level& level = levels_[li];
    for (std::size_t i = 0; i < level.orbit.size(); ++i)
      for (const Permutation& gen : level.gens) {
        const int image = gen(level.orbit[i]);
        auto& slot = level.transversal[static_cast<std::size_t>(image) - 1];
        if (!slot) {
          slot = compose(gen, *level.transversal[static_cast<std::size_t>(level.orbit[i]) - 1]);
          level.orbit.push_back(image);
        }
      }
  }

  // Tests the Schreier generators of one level outside the already verified
  // rectangle.  Residues are sifted back in below this level, which may grow
  // this same level's generator list or orbit; the sweep repeats until the
  // rectangle covers everything.  Returns true when anything was installed.
  bool verify_level(std::size_t li) {
    bool installed = false;
    for (;;) {
      const std::size_t points = levels_[li].orbit.size();
      const std::size_t gens = levels_[li].gens.size();
      if (points == levels_[li].verified_points && gens == levels_[li].verified_gens) break;
      for (std::size_t pi = 0; pi < points; ++pi)
        for (std::size_t gi = 0; gi < gens; ++gi) {
          if (pi < levels_[li].verified_points && gi < levels_[li].verified_gens) continue;
          const Level& level = levels_[li];
          const int point = level.orbit[pi];
          const Permutation& gen = level.gens[gi];
          const Permutation& to_point = *level.transversal[static_cast<std::size_t>(point) - 1];
          const Permutation& to_image =
              *level.transversal[static_cast<std::size_t>(gen(point)) - 1];
          Permutation schreier = compose(to_image.inverse(), compose(gen, to_point));
          if (!schreier.is_identity()) {
            sift_in(schreier, li + 1);
            installed = true;
          }
        }
      levels_[li].verified_points = points;
      levels_[li].verified_gens = gens;
    }
    return installed;
  }

  int degree_;
  std::vector<Level> levels_;
};

inline GroupOrder group_order(const GeneratorSet& g, int degree_bound = kDefaultDegreeBound) {
  return StabilizerChain(g, degree_bound).order();
}

inline bool contains(const GeneratorSet& g, const Permutation& p,
                     int degree_bound = kDefaultDegreeBound) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("membership test needs matching degrees");
  return StabilizerChain(g, degree_bound).contains(p);
}

}  // namespace permprim
