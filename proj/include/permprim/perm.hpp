#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permprim {

// Thrown by parse_permutation; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A bijection on {1, ..., d}, d >= 2.  Stored as the image table: image_[i-1] = p(i).
class Permutation {
public:
  explicit Permutation(int degree) : image_(checked_degree(degree)) {
    std::iota(image_.begin(), image_.end(), 1);
  }

  Permutation(int degree, std::vector<int> image) : image_(std::move(image)) {
    checked_degree(degree);
    if (static_cast<int>(image_.size()) != degree)
      throw std::invalid_argument("image table size does not match degree");
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("image table entry out of range");
      if (seen[static_cast<std::size_t>(v) - 1])
        throw std::invalid_argument("image table is not a bijection");
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
  }

  int degree() const { return static_cast<int>(image_.size()); }

  // Image of a point; the caller guarantees 1 <= point <= degree().
  int operator()(int point) const { return image_[static_cast<std::size_t>(point) - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= degree(); ++i)
      inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv), unchecked_t{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation power(const Permutation& p, long long exponent);

private:
  struct unchecked_t {};
  Permutation(std::vector<int> image, unchecked_t) : image_(std::move(image)) {}

  static int checked_degree(int degree) {
    if (degree < 2) throw std::invalid_argument("degree must be at least 2");
    return degree;
  }

  std::vector<int> image_;
};

// Apply q first, then p: compose(p, q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of different degrees");
  std::vector<int> image(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    image[static_cast<std::size_t>(i) - 1] = p(q(i));
  return Permutation(std::move(image), Permutation::unchecked_t{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// p^exponent for any integer exponent; each cycle is rotated by exponent mod its length.
inline Permutation power(const Permutation& p, long long exponent) {
  const int d = p.degree();
  std::vector<int> image(static_cast<std::size_t>(d), 0);
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::vector<int> cyc;
  for (int start = 1; start <= d; ++start) {
    if (seen[static_cast<std::size_t>(start) - 1]) continue;
    cyc.clear();
    int x = start;
    do {
      seen[static_cast<std::size_t>(x) - 1] = 1;
      cyc.push_back(x);
      x = p(x);
    } while (x != start);
    const long long n = static_cast<long long>(cyc.size());
    const std::size_t shift = static_cast<std::size_t>(((exponent % n) + n) % n);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      image[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + shift) % cyc.size()];
  }
  return Permutation(std::move(image), Permutation::unchecked_t{});
}

// One cycle of a decomposition, listed from its smallest element in traversal order.
struct Cycle {
  std::vector<int> elements;

  int length() const { return static_cast<int>(elements.size()); }
  bool contains(int point) const {
    return std::find(elements.begin(), elements.end(), point) != elements.end();
  }
};

// Full decomposition including fixed points as 1-cycles, ordered by smallest element.
struct CycleDecomposition {
  int degree = 0;
  std::vector<Cycle> cycles;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition dec;
  dec.degree = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start) - 1]) continue;
    Cycle c;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x) - 1] = 1;
      c.elements.push_back(x);
      x = p(x);
    } while (x != start);
    dec.cycles.push_back(std::move(c));
  }
  return dec;
}

// The partition of d given by the cycle lengths of a permutation (1-cycles included).
struct PartitionOfD {
  PartitionOfD(int degree, std::vector<int> parts)
      : degree_(degree), parts_(std::move(parts)) {
    if (degree < 2) throw std::invalid_argument("degree must be at least 2");
    long long sum = 0;
    for (int part : parts_) {
      if (part < 1) throw std::invalid_argument("every part must be at least 1");
      sum += part;
    }
    if (sum != degree) throw std::invalid_argument("parts must sum to the degree");
  }

  int degree() const { return degree_; }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  friend bool operator==(const PartitionOfD&, const PartitionOfD&) = default;

private:
  int degree_;
  std::vector<int> parts_;
};

// Cycle-type partition, parts sorted ascending.
inline PartitionOfD partition_of(const Permutation& p) {
  std::vector<int> parts;
  for (const Cycle& c : cycle_decomposition(p).cycles)
    parts.push_back(c.length());
  std::sort(parts.begin(), parts.end());
  return PartitionOfD(p.degree(), std::move(parts));
}

namespace detail {

inline void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
    ++pos;
}

inline int parse_point(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  long long value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw ParseError("point is too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a point", pos);
  if (value < 1) throw ParseError("points are 1-based; 0 is not a point", start);
  return static_cast<int>(value);
}

}  // namespace detail

// Disjoint cycle notation: "(1 2)(3 4 5)", "(1,2,3)", or "()" for the identity.
// Fixed points may be written as explicit 1-cycles.  When degree is absent it is
// inferred as the largest point mentioned.
inline Permutation parse_permutation(std::string_view text,
                                     std::optional<int> degree = std::nullopt) {
  if (degree && *degree < 2) throw ParseError("degree must be at least 2", 0);

  struct Entry {
    int point;
    std::size_t offset;
  };
  std::vector<std::vector<Entry>> cycles;
  bool saw_empty_cycle = false;
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  if (pos == text.size()) throw ParseError("empty input", pos);

  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    detail::skip_ws(text, pos);
    std::vector<Entry> cycle;
    while (pos < text.size() && text[pos] != ')') {
      const std::size_t offset = pos;
      cycle.push_back({detail::parse_point(text, pos), offset});
      detail::skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        detail::skip_ws(text, pos);
        if (pos >= text.size() || text[pos] == ')')
          throw ParseError("expected a point after ','", pos);
      }
    }
    if (pos == text.size()) throw ParseError("unterminated cycle, expected ')'", pos);
    ++pos;  // consume ')'
    if (cycle.empty())
      saw_empty_cycle = true;
    else
      cycles.push_back(std::move(cycle));
    detail::skip_ws(text, pos);
  }

  if (saw_empty_cycle && !cycles.empty())
    throw ParseError("'()' denotes the identity and cannot be mixed with cycles", 0);

  int max_point = 0;
  std::size_t max_offset = 0;
  for (const auto& cycle : cycles)
    for (const Entry& e : cycle)
      if (e.point > max_point) {
        max_point = e.point;
        max_offset = e.offset;
      }

  int d;
  if (degree) {
    d = *degree;
    if (max_point > d)
      throw ParseError("point " + std::to_string(max_point) + " exceeds degree " +
                           std::to_string(d),
                       max_offset);
  } else {
    if (max_point < 2)
      throw ParseError("cannot infer a degree of at least 2; pass the degree explicitly", 0);
    d = max_point;
  }

  std::vector<int> image(static_cast<std::size_t>(d));
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  for (const auto& cycle : cycles) {
    for (const Entry& e : cycle) {
      if (used[static_cast<std::size_t>(e.point) - 1])
        throw ParseError("point " + std::to_string(e.point) + " appears twice", e.offset);
      used[static_cast<std::size_t>(e.point) - 1] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[static_cast<std::size_t>(cycle[i].point) - 1] =
          cycle[(i + 1) % cycle.size()].point;
  }
  return Permutation(d, std::move(image));
}

// Canonical cycle notation: cycles ordered by smallest element, each starting at its
// smallest element.  1-cycles are dropped unless include_fixed; the identity prints
// as "()" when fixed points are suppressed.
inline std::string print_permutation(const Permutation& p, bool include_fixed = false) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(p).cycles) {
    if (c.length() == 1 && !include_fixed) continue;
    out += '(';
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(c.elements[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace permprim
