#include "gassmann/permutation.hpp"

#include <cctype>

#include "gassmann/errors.hpp"

namespace gassmann {

Permutation identity_perm(std::uint32_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p.images[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  Permutation r;
  r.images.resize(p.degree());
  for (std::uint32_t x = 0; x < p.degree(); ++x) r.images[x] = p.images[q.images[x]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images.resize(p.degree());
  for (std::uint32_t x = 0; x < p.degree(); ++x) r.images[p.images[x]] = x;
  return r;
}

Permutation parse_cycles(std::string_view text, std::uint32_t degree) {
  if (degree == 0) throw MalformedCycle("degree must be positive");
  Permutation p = identity_perm(degree);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  const auto skip_blank = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  bool saw_cycle = false;
  skip_blank();
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedCycle("expected '(' at position " + std::to_string(i));
    ++i;
    saw_cycle = true;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_blank();
      while (i < text.size() && text[i] == ',') {
        ++i;
        skip_blank();
      }
      if (i >= text.size()) throw MalformedCycle("unbalanced parentheses");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedCycle(std::string("unexpected character '") + text[i] + "'");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 1'000'000'000) throw PointOutOfRange("point too large");
        ++i;
      }
      if (value == 0 || value > degree)
        throw PointOutOfRange("point " + std::to_string(value) + " outside 1.." +
                              std::to_string(degree));
      std::uint32_t point = static_cast<std::uint32_t>(value - 1);  // to 0-indexed
      if (used[point])
        throw RepeatedPoint("point " + std::to_string(value) + " appears twice");
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_blank();
  }
  if (!saw_cycle) throw MalformedCycle("empty cycle expression");
  return p;
}

std::vector<Permutation> parse_cycle_list(std::string_view text, std::uint32_t degree) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    std::size_t a = piece.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return;
    out.push_back(parse_cycles(piece, degree));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.images[i] == i) continue;
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p.images[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace gassmann
