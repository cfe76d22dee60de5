#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace galcount {

/// Partition of n listing cycle lengths in non-increasing order, fixed
/// points included as 1s.
using CycleType = std::vector<int>;

std::string to_string(const CycleType& type);

/// A bijection of {1,...,n}.
///
/// Points are 1-based in every public accessor and in the text form
/// "(1 2 3)(4 5)". Composition follows function notation:
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// images[i - 1] is the image of i.
  static Permutation from_images(const std::vector<int>& images);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// Parses cycle notation; "()" and "" denote the identity.
  static Permutation parse(int degree, std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const { return image_[point - 1] + 1; }
  /// 0-based image lookup for hot loops.
  int map0(int index) const { return image_[index]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  int orbit_count() const;
  CycleType cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // non-trivial cycles only

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {}

  std::vector<std::uint8_t> image_;
};

/// ind(g) = n - (number of orbits of g).
int element_index(const Permutation& g);

/// Rank of g in the lexicographic order of S_n (0 .. n!-1).
std::uint32_t lex_rank(const Permutation& g);
Permutation lex_unrank(int degree, std::uint32_t rank);

std::uint64_t factorial(int n);

}  // namespace galcount
