#include "galcount/perm_group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace galcount {

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint32_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

// Finest block system in which every listed pair shares a block (Atkinson's
// refinement under the generators). Returns the class id of each point.
std::vector<int> minimal_blocks(const PermGroup& g,
                                const std::vector<std::pair<int, int>>& seeds) {
  const int n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> queue;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      const int ga = gen.map0(a), gb = gen.map0(b);
      if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
    }
  }
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = uf.find(i);
  return cls;
}

BlockSystem to_block_system(const std::vector<int>& cls) {
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < cls.size(); ++i)
    groups[cls[i]].push_back(static_cast<int>(i) + 1);
  BlockSystem bs;
  for (auto& [_, block] : groups) bs.blocks.push_back(std::move(block));
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

std::vector<std::pair<int, int>> seeds_of(const BlockSystem& bs) {
  std::vector<std::pair<int, int>> seeds;
  for (const auto& block : bs.blocks)
    for (std::size_t k = 1; k < block.size(); ++k)
      seeds.emplace_back(block[0] - 1, block[k] - 1);
  return seeds;
}

// Modular inverse in F_q for prime q.
int inv_mod(int a, int q) {
  a %= q;
  if (a < 0) a += q;
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw std::logic_error("no inverse");
}

// Action of the Moebius map z -> (a z + b) / (c z + d) on the projective
// line over F_5, with points listed in `points` (value 5 stands for inf).
Permutation moebius(int a, int b, int c, int d, const std::vector<int>& points) {
  constexpr int q = 5, inf = 5;
  auto apply = [&](int z) {
    if (z == inf) return c == 0 ? inf : (a * inv_mod(c, q)) % q;
    const int den = ((c * z + d) % q + q) % q;
    if (den == 0) return inf;
    return (((a * z + b) % q + q) % q) * inv_mod(den, q) % q;
  };
  std::vector<int> images(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int target = apply(points[i]);
    const auto pos = std::find(points.begin(), points.end(), target) - points.begin();
    images[i] = static_cast<int>(pos) + 1;
  }
  return Permutation::from_images(images);
}

// Linear or affine map v -> M v + t over F_2^3; M given by its columns
// (bit masks), vectors encoded as 3-bit integers.
int apply_f2(const std::array<int, 3>& cols, int t, int v) {
  int out = t;
  for (int k = 0; k < 3; ++k)
    if ((v >> k) & 1) out ^= cols[k];
  return out;
}

bool invertible_f2(const std::array<int, 3>& cols) {
  for (int v = 1; v < 8; ++v)
    if (apply_f2(cols, 0, v) == 0) return false;
  return true;
}

// Greedy generating subset of `elements`, in listed order.
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements,
                                           std::uint64_t target_order) {
  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  std::vector<Permutation> span;
  for (const auto& e : elements) {
    if (order == target_order) break;
    if (e.is_identity()) continue;
    if (!gens.empty() && std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    auto grp = PermGroup::generated_by(gens);
    span = grp.elements();
    order = grp.order();
  }
  return gens;
}

void expect_attributes(const PermGroup& g, std::uint64_t order, bool even) {
  if (g.order() != order || g.is_even() != even || !is_transitive(g) || !is_primitive(g))
    throw std::logic_error("catalog group " + g.name() + " failed its attribute check");
}

PermGroup projective_line_group(bool special) {
  // inf,0,1,3,4,2 -> 1..6
  const std::vector<int> points = {5, 0, 1, 3, 4, 2};
  std::vector<Permutation> gens = {
      moebius(1, 1, 0, 1, points),   // z + 1
      moebius(0, 4, 1, 0, points),   // -1/z
  };
  // z -> 2z has non-square determinant; z -> 4z is its square.
  gens.insert(gens.begin() + 1, special ? moebius(4, 0, 0, 1, points) : moebius(2, 0, 0, 1, points));
  auto g = PermGroup::generated_by(gens, special ? "6T12" : "6T14");
  expect_attributes(g, special ? 60 : 120, special);
  return g;
}

PermGroup psl32() {
  std::vector<Permutation> all;
  for (int c0 = 1; c0 < 8; ++c0)
    for (int c1 = 1; c1 < 8; ++c1)
      for (int c2 = 1; c2 < 8; ++c2) {
        const std::array<int, 3> cols = {c0, c1, c2};
        if (!invertible_f2(cols)) continue;
        std::vector<int> images(7);
        for (int v = 1; v < 8; ++v) images[v - 1] = apply_f2(cols, 0, v);
        all.push_back(Permutation::from_images(images));
      }
  std::sort(all.begin(), all.end());
  auto g = PermGroup::generated_by(reduce_generators(all, 168), "7T5");
  expect_attributes(g, 168, true);
  return g;
}

PermGroup agl32() {
  std::vector<Permutation> all;
  for (int c0 = 1; c0 < 8; ++c0)
    for (int c1 = 1; c1 < 8; ++c1)
      for (int c2 = 1; c2 < 8; ++c2) {
        const std::array<int, 3> cols = {c0, c1, c2};
        if (!invertible_f2(cols)) continue;
        for (int t = 0; t < 8; ++t) {
          std::vector<int> images(8);
          for (int v = 0; v < 8; ++v) images[v] = apply_f2(cols, t, v) + 1;
          all.push_back(Permutation::from_images(images));
        }
      }
  std::sort(all.begin(), all.end());
  auto g = PermGroup::generated_by(reduce_generators(all, 1344), "8T48");
  expect_attributes(g, 1344, true);
  return g;
}

}  // namespace

PermGroup PermGroup::generated_by(std::vector<Permutation> gens, std::string name) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const int n = gens.front().degree();
  if (n < 1) throw std::invalid_argument("degree 0 group");
  if (n > kMaxGroupDegree)
    throw std::invalid_argument("group degree exceeds " + std::to_string(kMaxGroupDegree));
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");

  PermGroup grp;
  grp.degree_ = n;
  grp.name_ = std::move(name);
  grp.generators_ = std::move(gens);
  grp.member_bits_.assign((factorial(n) + 63) / 64, 0);

  const auto id = Permutation::identity(n);
  std::vector<Permutation> elems = {id};
  set_bit(grp.member_bits_, lex_rank(id));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : grp.generators_) {
      auto next = elems[i] * gen;
      const auto r = lex_rank(next);
      if (test_bit(grp.member_bits_, r)) continue;
      set_bit(grp.member_bits_, r);
      elems.push_back(std::move(next));
    }
  }
  std::sort(elems.begin(), elems.end());
  for (const auto& e : elems) {
    if (!e.is_even()) grp.parity_even_ = false;
    grp.cycle_types_.insert(e.cycle_type());
  }
  grp.elements_ = std::move(elems);
  return grp;
}

bool PermGroup::contains(const Permutation& g) const {
  return g.degree() == degree_ && test_bit(member_bits_, lex_rank(g));
}

std::string PermGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out;
}

PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  return PermGroup::generated_by(gens);
}

PermGroup symmetric_group(int n) {
  if (n == 1) return PermGroup::generated_by({Permutation::identity(1)}, "S1");
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1);
  return PermGroup::generated_by({Permutation::from_cycles(n, {{1, 2}}),
                                  Permutation::from_cycles(n, {cycle})},
                                 "S" + std::to_string(n));
}

PermGroup alternating_group(int n) {
  if (n < 3) return PermGroup::generated_by({Permutation::identity(n)}, "A" + std::to_string(n));
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return PermGroup::generated_by(gens, "A" + std::to_string(n));
}

PermGroup cyclic_group(int n) {
  if (n == 1) return PermGroup::generated_by({Permutation::identity(1)}, "C1");
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1);
  return PermGroup::generated_by({Permutation::from_cycles(n, {cycle})}, "C" + std::to_string(n));
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs degree >= 3");
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1);
  std::vector<int> reflection(n);
  for (int i = 0; i < n; ++i) reflection[i] = ((n - i) % n) + 1;  // i -> -i
  return PermGroup::generated_by({Permutation::from_cycles(n, {cycle}),
                                  Permutation::from_images(reflection)},
                                 "D" + std::to_string(n));
}

PermGroup catalog_group(std::string_view name, int degree) {
  if (name == "6T12" || name == "6T14" || name == "7T5" || name == "8T48") {
    const int natural = name.front() - '0';
    if (degree != 0 && degree != natural)
      throw std::invalid_argument(std::string(name) + " has degree " + std::to_string(natural));
    if (name == "6T12") return projective_line_group(true);
    if (name == "6T14") return projective_line_group(false);
    if (name == "7T5") return psl32();
    return agl32();
  }
  if (name.empty()) throw std::invalid_argument("empty group name");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
  std::string_view rest = name.substr(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  int n = degree;
  if (!rest.empty()) {
    int parsed = 0;
    for (char ch : rest) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("unknown group name: " + std::string(name));
      parsed = parsed * 10 + (ch - '0');
    }
    if (degree != 0 && degree != parsed)
      throw std::invalid_argument("inconsistent degree for " + std::string(name));
    n = parsed;
  }
  if (n < 1 || n > kMaxGroupDegree)
    throw std::invalid_argument("degree out of range for " + std::string(name));
  switch (family) {
    case 'S': return symmetric_group(n);
    case 'A':
      if (n < 3) throw std::invalid_argument("A_n is transitive only for n >= 3");
      return alternating_group(n);
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    default: throw std::invalid_argument("unknown group name: " + std::string(name));
  }
}

std::vector<int> orbit(const PermGroup& g, int point) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<int> out = {point - 1};
  seen[point - 1] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& gen : g.generators()) {
      const int next = gen.map0(out[i]);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  for (auto& p : out) ++p;
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& g) {
  return static_cast<int>(orbit(g, 1).size()) == g.degree();
}

int group_index(const PermGroup& g) {
  if (g.order() < 2) throw std::invalid_argument("group_index of the trivial group");
  int best = g.degree();
  for (const auto& e : g.elements())
    if (!e.is_identity()) best = std::min(best, element_index(e));
  return best;
}

mpq_class malle_a(const PermGroup& g) { return mpq_class(1, group_index(g)); }

std::vector<BlockSystem> block_systems(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("block systems need a transitive group");
  const int n = g.degree();
  std::set<BlockSystem> found;
  std::deque<BlockSystem> frontier;
  auto consider = [&](const std::vector<int>& cls) {
    auto bs = to_block_system(cls);
    if (bs.block_count() < 2) return;  // the whole set
    if (found.insert(bs).second) frontier.push_back(std::move(bs));
  };
  for (int j = 1; j < n; ++j) consider(minimal_blocks(g, {{0, j}}));
  // Every block containing point 1 is a join of minimal ones.
  while (!frontier.empty()) {
    auto bs = frontier.front();
    frontier.pop_front();
    const auto& first = bs.blocks.front();
    for (int j = 1; j < n; ++j) {
      if (std::binary_search(first.begin(), first.end(), j + 1)) continue;
      auto seeds = seeds_of(bs);
      seeds.emplace_back(0, j);
      consider(minimal_blocks(g, seeds));
    }
  }
  return {found.begin(), found.end()};
}

bool is_primitive(const PermGroup& g) { return block_systems(g).empty(); }

std::vector<Permutation> coset_representatives(const PermGroup& g) {
  const int n = g.degree();
  const auto total = factorial(n);
  std::vector<std::uint64_t> covered((total + 63) / 64, 0);
  std::vector<Permutation> reps;
  for (std::uint32_t r = 0; r < total; ++r) {
    if (test_bit(covered, r)) continue;
    auto sigma = lex_unrank(n, r);
    for (const auto& h : g.elements()) set_bit(covered, lex_rank(sigma * h));
    reps.push_back(std::move(sigma));
  }
  return reps;
}

bool is_subgroup_of_conjugate(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
  if (g.order() % h.order() != 0) return false;
  const int n = g.degree();
  const auto total = factorial(n);
  for (std::uint32_t r = 0; r < total; ++r) {
    const auto sigma = lex_unrank(n, r);
    const auto sigma_inv = sigma.inverse();
    bool inside = true;
    for (const auto& gen : h.generators())
      if (!g.contains(sigma * gen * sigma_inv)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

const std::set<CycleType>& cycle_type_set(const PermGroup& g) { return g.cycle_types(); }

}  // namespace galcount
