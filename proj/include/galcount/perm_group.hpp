#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "galcount/perm.hpp"

namespace galcount {

/// Largest degree for which groups are enumerated element by element.
inline constexpr int kMaxGroupDegree = 8;

/// A permutation group of degree n <= 8, held as its full element list.
///
/// Values are immutable once built and may be shared freely across threads.
class PermGroup {
 public:
  /// Closure of `gens` under composition. Throws std::invalid_argument on an
  /// empty list, mixed degrees or degree > kMaxGroupDegree.
  static PermGroup generated_by(std::vector<Permutation> gens, std::string name = {});

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted lexicographically by image table; the identity comes first.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  /// True iff every element is an even permutation.
  bool is_even() const { return parity_even_; }
  const std::set<CycleType>& cycle_types() const { return cycle_types_; }

  bool contains(const Permutation& g) const;

  /// Generators in cycle notation, separated by ", ".
  std::string to_string() const;

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint64_t> member_bits_;  // indexed by lex_rank
  bool parity_even_ = true;
  std::set<CycleType> cycle_types_;
};

/// A non-trivial block system: k >= 2 blocks, each of size m >= 2.
/// Blocks are sorted, points are 1-based.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  int block_size() const { return static_cast<int>(blocks.front().size()); }
  int block_count() const { return static_cast<int>(blocks.size()); }
  auto operator<=>(const BlockSystem&) const = default;
};

PermGroup group_from_generators(const std::vector<Permutation>& gens);

/// Catalog constructors. Accepted names: "6T12", "6T14", "7T5", "8T48",
/// "A", "S", "C", "D" (the latter four take the degree from `degree`; the
/// spellings "A6", "S_6", "C4", "D_5" are also understood).
///
/// Point labellings for the natural actions:
///   6T12, 6T14  projective line over F_5, points inf,0,1,3,4,2 -> 1..6
///   7T5         nonzero vectors of F_2^3, vector with binary value v -> v
///   8T48        all vectors of F_2^3, vector with binary value v -> v+1
/// With this ordering of the projective line, 6T14 is exactly the stabiliser
/// of the sextic invariant used by the resolvent module.
PermGroup catalog_group(std::string_view name, int degree = 0);

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);

bool is_transitive(const PermGroup& g);
std::vector<int> orbit(const PermGroup& g, int point);

/// ind(G): minimum of element_index over non-identity elements.
int group_index(const PermGroup& g);
/// a(G) = 1 / ind(G).
mpq_class malle_a(const PermGroup& g);

/// All non-trivial block systems of a transitive group, sorted.
std::vector<BlockSystem> block_systems(const PermGroup& g);
bool is_primitive(const PermGroup& g);

/// One representative per left coset sigma*G in S_n, each the
/// lexicographically least element of its coset, listed in increasing order.
std::vector<Permutation> coset_representatives(const PermGroup& g);

/// True iff sigma * H * sigma^-1 is contained in G for some sigma in S_n.
bool is_subgroup_of_conjugate(const PermGroup& h, const PermGroup& g);

const std::set<CycleType>& cycle_type_set(const PermGroup& g);

}  // namespace galcount
