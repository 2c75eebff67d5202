#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gassmann {

// A permutation of {0, ..., n-1}, stored as its image array.
// The default three-way comparison is lexicographic on the image array,
// which is exactly the canonical element order used everywhere downstream
// (the identity is the lexicographic minimum of all degree-n permutations).
struct Permutation {
  std::vector<std::uint32_t> images;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return images[point]; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

Permutation identity_perm(std::uint32_t degree);
bool is_identity(const Permutation& p);

// (p*q)(x) = p(q(x)); q is applied first. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Parse whitespace-tolerant cycle notation with 1-indexed points, e.g.
// "(1 2 3)(4 5)". "()" is the identity. Commas are also accepted as point
// separators. Throws MalformedCycle, PointOutOfRange, RepeatedPoint.
Permutation parse_cycles(std::string_view text, std::uint32_t degree);

// Split a comma-separated list of cycle expressions (commas inside
// parentheses are point separators, not list separators).
std::vector<Permutation> parse_cycle_list(std::string_view text, std::uint32_t degree);

// Canonical 1-indexed cycle notation; "()" for the identity. Cycles are
// ordered by smallest moved point and each cycle starts at its smallest point.
std::string cycle_string(const Permutation& p);

}  // namespace gassmann
