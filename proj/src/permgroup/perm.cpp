#include "galcount/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace galcount {

std::string to_string(const CycleType& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(type[i]);
  }
  return out;
}

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > 255)
    throw std::invalid_argument("permutation degree must be in [1, 255]");
  std::vector<std::uint8_t> image(degree);
  for (int i = 0; i < degree; ++i) image[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 255)
    throw std::invalid_argument("permutation degree must be in [1, 255]");
  std::vector<std::uint8_t> image(n);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || hit[v - 1])
      throw std::invalid_argument("image table is not a bijection of {1..n}");
    hit[v - 1] = true;
    image[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 1 || a > degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[a - 1])
        throw std::invalid_argument("cycles are not disjoint");
      used[a - 1] = true;
      const int b = cycle[(k + 1) % cycle.size()];
      p.image_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad character in cycle notation: " + std::string(text));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<std::uint8_t> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[rhs.image_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    out[image_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const { return (degree() - orbit_count()) % 2 == 0; }

int Permutation::orbit_count() const {
  std::vector<bool> seen(image_.size(), false);
  int orbits = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (std::size_t j = i; !seen[j]; j = image_[j]) seen[j] = true;
  }
  return orbits;
}

CycleType Permutation::cycle_type() const {
  CycleType type;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const auto cs = cycles();
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

int element_index(const Permutation& g) { return g.degree() - g.orbit_count(); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint32_t lex_rank(const Permutation& g) {
  const int n = g.degree();
  if (n > 12) throw std::invalid_argument("lex_rank supports degree <= 12");
  std::uint32_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = g.map0(i);
    // number of unused values smaller than v
    const int smaller = v - __builtin_popcount(used & ((1u << v) - 1u));
    rank += static_cast<std::uint32_t>(smaller * factorial(n - 1 - i));
    used |= 1u << v;
  }
  return rank;
}

Permutation lex_unrank(int degree, std::uint32_t rank) {
  std::vector<int> pool(degree);
  for (int i = 0; i < degree; ++i) pool[i] = i + 1;
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) {
    const auto f = static_cast<std::uint32_t>(factorial(degree - 1 - i));
    const auto k = rank / f;
    rank %= f;
    images[i] = pool[k];
    pool.erase(pool.begin() + k);
  }
  return Permutation::from_images(images);
}

}  // namespace galcount
