#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "galcount/perm_group.hpp"

using namespace galcount;

namespace {

// All set partitions of {1..n} into equal blocks (k >= 2, m >= 2) that the
// group preserves. Independent of the union-find refinement.
std::vector<BlockSystem> brute_force_block_systems(const PermGroup& g) {
  const int n = g.degree();
  std::vector<BlockSystem> out;
  std::vector<int> label(n, 0);
  // restricted growth strings enumerate every set partition once
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(used);
      for (int p = 0; p < n; ++p) blocks[label[p]].push_back(p + 1);
      const auto m = blocks.front().size();
      if (used < 2 || m < 2) return;
      for (const auto& b : blocks)
        if (b.size() != m) return;
      for (const auto& e : g.elements())
        for (const auto& b : blocks) {
          std::vector<int> image;
          for (int p : b) image.push_back(e(p));
          std::sort(image.begin(), image.end());
          if (std::find(blocks.begin(), blocks.end(), image) == blocks.end()) return;
        }
      std::sort(blocks.begin(), blocks.end());
      out.push_back(BlockSystem{blocks});
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      label[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Permutation, ParseComposeInvert) {
  const auto a = Permutation::parse(5, "(1 2 3)(4 5)");
  EXPECT_EQ(a(1), 2);
  EXPECT_EQ(a(3), 1);
  EXPECT_EQ(a(4), 5);
  EXPECT_EQ(a.to_string(), "(1 2 3)(4 5)");
  EXPECT_TRUE((a * a.inverse()).is_identity());
  const auto b = Permutation::parse(5, "(1 2)");
  // (a*b)(1) = a(b(1)) = a(2) = 3
  EXPECT_EQ((a * b)(1), 3);
  EXPECT_EQ(Permutation::parse(4, "()").to_string(), "()");
  EXPECT_THROW(Permutation::parse(3, "(1 4)"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse(3, "(1 2)(2 3)"), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
}

TEST(Permutation, ElementIndex) {
  EXPECT_EQ(element_index(Permutation::identity(6)), 0);
  EXPECT_EQ(element_index(Permutation::parse(6, "(2 5)")), 1);
  EXPECT_EQ(element_index(Permutation::parse(6, "(1 2 3 4 5 6)")), 5);
  EXPECT_EQ(Permutation::parse(6, "(1 2 3)(4 5)").cycle_type(), (CycleType{3, 2, 1}));
}

TEST(Permutation, LexRankRoundTrip) {
  for (std::uint32_t r = 0; r < 720; ++r) EXPECT_EQ(lex_rank(lex_unrank(6, r)), r);
  EXPECT_EQ(lex_rank(Permutation::identity(7)), 0u);
}

TEST(PermGroup, ClosureOrders) {
  EXPECT_EQ(group_from_generators({Permutation::parse(2, "(1 2)")}).order(), 2u);
  EXPECT_EQ(catalog_group("6T14").order(), 120u);
  EXPECT_EQ(catalog_group("8T48").order(), 1344u);
  EXPECT_EQ(symmetric_group(8).order(), 40320u);
  EXPECT_EQ(alternating_group(6).order(), 360u);
  EXPECT_EQ(dihedral_group(6).order(), 12u);
}

TEST(PermGroup, GeneratorErrors) {
  EXPECT_THROW(group_from_generators({}), std::invalid_argument);
  EXPECT_THROW(group_from_generators({Permutation::identity(3), Permutation::identity(4)}),
               std::invalid_argument);
  EXPECT_THROW(group_from_generators({Permutation{}}), std::invalid_argument);
  EXPECT_THROW(group_from_generators({Permutation::identity(9)}), std::invalid_argument);
}

TEST(PermGroup, CatalogAttributes) {
  struct Row {
    const char* name;
    std::uint64_t order;
    bool even;
  };
  for (const Row& row : {Row{"6T12", 60, true}, Row{"6T14", 120, false},
                         Row{"7T5", 168, true}, Row{"8T48", 1344, true}}) {
    const auto g = catalog_group(row.name);
    EXPECT_EQ(g.order(), row.order) << row.name;
    EXPECT_EQ(g.is_even(), row.even) << row.name;
    EXPECT_TRUE(is_transitive(g)) << row.name;
    EXPECT_TRUE(is_primitive(g)) << row.name;
    EXPECT_EQ(group_index(g), 2) << row.name;
    EXPECT_EQ(malle_a(g), mpq_class(1, 2)) << row.name;
    EXPECT_EQ(factorial(g.degree()) % g.order(), 0u);
  }
  EXPECT_THROW(catalog_group("6T15"), std::invalid_argument);
  EXPECT_THROW(catalog_group("7T5", 6), std::invalid_argument);
  EXPECT_THROW(catalog_group("A", 0), std::invalid_argument);
  EXPECT_EQ(catalog_group("S_5").order(), 120u);
  EXPECT_EQ(catalog_group("A", 5).order(), 60u);
  EXPECT_EQ(catalog_group("C4").order(), 4u);
}

TEST(PermGroup, Transitivity) {
  EXPECT_FALSE(is_transitive(group_from_generators({Permutation::parse(3, "(1 2)")})));
  EXPECT_TRUE(is_transitive(symmetric_group(6)));
  EXPECT_TRUE(is_transitive(catalog_group("8T48")));
  EXPECT_EQ(orbit(catalog_group("8T48"), 1).size(), 8u);
}

TEST(PermGroup, MalleIndex) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(group_index(symmetric_group(n)), 1);
    EXPECT_EQ(malle_a(symmetric_group(n)), 1);
  }
  EXPECT_EQ(group_index(alternating_group(6)), 2);
  EXPECT_EQ(group_index(cyclic_group(5)), 4);
  EXPECT_THROW(group_index(group_from_generators({Permutation::identity(3)})),
               std::invalid_argument);
}

TEST(PermGroup, MalleIndexConjugationInvariant) {
  std::mt19937 rng(7);
  const auto g = catalog_group("7T5");
  for (int trial = 0; trial < 10; ++trial) {
    const auto sigma = lex_unrank(7, rng() % 5040);
    std::vector<Permutation> gens;
    for (const auto& h : g.generators()) gens.push_back(sigma * h * sigma.inverse());
    EXPECT_EQ(group_index(group_from_generators(gens)), group_index(g));
  }
}

TEST(PermGroup, BlocksOfCyclicFour) {
  const auto c4 = cyclic_group(4);
  const auto systems = block_systems(c4);
  ASSERT_EQ(systems.size(), 1u);
  EXPECT_EQ(systems[0].blocks, (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
  EXPECT_FALSE(is_primitive(c4));
  EXPECT_EQ(systems, brute_force_block_systems(c4));
}

TEST(PermGroup, BlocksMatchBruteForce) {
  std::vector<PermGroup> groups = {symmetric_group(6), cyclic_group(6), dihedral_group(6),
                                   cyclic_group(4), dihedral_group(4), alternating_group(5),
                                   catalog_group("6T12"), catalog_group("6T14"),
                                   cyclic_group(5), dihedral_group(5)};
  // S_2 wr S_3 style group: (1 2), (1 3 5)(2 4 6), (3 5)(4 6)
  groups.push_back(group_from_generators({Permutation::parse(6, "(1 2)"),
                                          Permutation::parse(6, "(1 3 5)(2 4 6)"),
                                          Permutation::parse(6, "(3 5)(4 6)")}));
  for (const auto& g : groups) {
    const auto systems = block_systems(g);
    EXPECT_EQ(systems, brute_force_block_systems(g)) << g.name();
    for (const auto& bs : systems) {
      EXPECT_EQ(g.degree() % bs.block_size(), 0);
      EXPECT_GE(bs.block_count(), 2);
      EXPECT_GE(bs.block_size(), 2);
    }
  }
  std::set<int> sizes;
  for (const auto& bs : block_systems(cyclic_group(6))) sizes.insert(bs.block_size());
  EXPECT_EQ(sizes, (std::set<int>{2, 3}));
  sizes.clear();
  for (const auto& bs : block_systems(dihedral_group(6))) sizes.insert(bs.block_size());
  EXPECT_EQ(sizes, (std::set<int>{2, 3}));
  EXPECT_THROW(block_systems(group_from_generators({Permutation::parse(4, "(1 2)")})),
               std::invalid_argument);
}

TEST(PermGroup, CosetRepresentatives) {
  EXPECT_EQ(coset_representatives(symmetric_group(6)).size(), 1u);
  EXPECT_TRUE(coset_representatives(symmetric_group(6))[0].is_identity());
  EXPECT_EQ(coset_representatives(alternating_group(6)).size(), 2u);
  const auto g = catalog_group("6T14");
  const auto reps = coset_representatives(g);
  ASSERT_EQ(reps.size(), 6u);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      EXPECT_EQ(g.contains(reps[i].inverse() * reps[j]), i == j);
  // each representative is the least element of its coset
  for (const auto& r : reps)
    for (const auto& h : g.elements()) EXPECT_LE(r, r * h);
  EXPECT_EQ(coset_representatives(catalog_group("8T48")).size(), 30u);
}

TEST(PermGroup, SubgroupOfConjugate) {
  EXPECT_TRUE(is_subgroup_of_conjugate(catalog_group("6T12"), catalog_group("6T14")));
  EXPECT_FALSE(is_subgroup_of_conjugate(symmetric_group(6), catalog_group("6T14")));
  EXPECT_TRUE(is_subgroup_of_conjugate(catalog_group("7T5"), catalog_group("7T5")));
  // a conjugated copy of 7T5 still embeds
  const auto sigma = Permutation::parse(7, "(1 5 2)(3 7)");
  const auto psl = catalog_group("7T5");
  std::vector<Permutation> gens;
  for (const auto& h : psl.generators()) gens.push_back(sigma * h * sigma.inverse());
  EXPECT_TRUE(is_subgroup_of_conjugate(group_from_generators(gens), psl));
  EXPECT_FALSE(is_subgroup_of_conjugate(alternating_group(6), catalog_group("6T14")));
  EXPECT_THROW(is_subgroup_of_conjugate(symmetric_group(5), symmetric_group(6)),
               std::invalid_argument);
}

TEST(PermGroup, CycleTypeSets) {
  EXPECT_EQ(cycle_type_set(cyclic_group(3)), (std::set<CycleType>{{1, 1, 1}, {3}}));
  EXPECT_EQ(cycle_type_set(symmetric_group(3)).size(), 3u);
  const auto pgl_group = catalog_group("6T14");
  const auto& pgl = cycle_type_set(pgl_group);
  // PGL(2,5) on the projective line: no element fixes exactly three points
  EXPECT_EQ(pgl.count(CycleType{3, 1, 1, 1}), 0u);
  EXPECT_EQ(pgl.count(CycleType{2, 1, 1, 1, 1}), 0u);
  EXPECT_EQ(pgl.count(CycleType{5, 1}), 1u);
  EXPECT_EQ(pgl.count(CycleType{6}), 1u);
  // enumeration oracle
  std::set<CycleType> seen;
  for (const auto& e : pgl_group.elements()) seen.insert(e.cycle_type());
  EXPECT_EQ(seen, pgl);
}
