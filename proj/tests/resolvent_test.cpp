#include <gtest/gtest.h>

#include <random>

#include "galcount/resolvent.hpp"
#include "galcount/roots.hpp"

using namespace galcount;

namespace {

IntPoly random_squarefree(std::mt19937_64& rng, int n, int bound, bool traceless = false) {
  std::uniform_int_distribution<int> d(-bound, bound);
  while (true) {
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    for (int i = 0; i < n; ++i) c[i] = d(rng);
    if (traceless) c[n - 1] = 0;
    IntPoly f(c);
    if (discriminant(f) != 0) return f;
  }
}

std::vector<ComplexBall> roots_of(const IntPoly& f, mpfr_prec_t prec = 256) {
  return complex_roots_certified(f, 1e-30, prec).roots;
}

// Sextic whose roots are the six conjugates of the F20-invariant
//   (b1b2 + b2b3 + b3b4 + b4b5 + b5b1 - b1b3 - b3b5 - b5b2 - b2b4 - b4b1)^2
// of the quintic q. Its Galois group is the image of Gal(q) acting on six points.
IntPoly sextic_from_quintic(const IntPoly& q) {
  const auto b = roots_of(q, 512);
  const PermGroup f20 = PermGroup::generated_by(
      {Permutation::parse(5, "(1 2 3 4 5)"), Permutation::parse(5, "(2 3 5 4)")});
  EXPECT_EQ(f20.order(), 20u);
  std::vector<ComplexBall> values;
  for (const auto& s : coset_representatives(f20)) {
    auto r = [&](int i) -> const ComplexBall& { return b[s.map0(i)]; };
    ComplexBall v(512);
    for (int i = 0; i < 5; ++i) v = v + r(i) * r((i + 1) % 5) - r(i) * r((i + 2) % 5);
    values.push_back(v * v);
  }
  std::vector<ComplexBall> c{ComplexBall(mpz_class(1), 512)};
  for (const auto& v : values) {
    std::vector<ComplexBall> next(c.size() + 1, ComplexBall(512));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - c[i] * v;
    }
    c = next;
  }
  std::vector<mpz_class> out;
  for (const auto& x : c) {
    auto z = x.unique_integer();
    EXPECT_TRUE(z.has_value());
    out.push_back(z.value_or(0));
  }
  return IntPoly(out);
}

}  // namespace

TEST(ResolventParams, DefaultsAndValidation) {
  const auto p = ResolventParams::defaults(4);
  EXPECT_EQ(p.w, std::vector<int>{1});
  EXPECT_EQ(p.e, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_NO_THROW(p.validate(4, 24));
  EXPECT_THROW(p.validate(5, 120), std::invalid_argument);
  ResolventParams bad = p;
  bad.e[2] = 0;
  EXPECT_THROW(bad.validate(4, 24), std::invalid_argument);
  bad = p;
  bad.w.assign(25, 1);
  EXPECT_THROW(bad.validate(4, 24), std::invalid_argument);
}

TEST(ResolventValue, Examples) {
  std::mt19937_64 rng(3);
  const IntPoly f = random_squarefree(rng, 5, 9);
  const auto roots = roots_of(f);
  ResolventParams ones;
  ones.w = {1, 1};
  ones.e.assign(5, 1);
  const ComplexBall sym = resolvent_value(roots, Permutation::identity(5), symmetric_group(5), ones);
  EXPECT_TRUE(sym.unique_integer().has_value());

  const auto quad = roots_of(IntPoly{-1, 0, 1});
  ResolventParams p;
  p.w = {1};
  p.e = {1, 1};
  const ComplexBall prod = resolvent_value(quad, Permutation::identity(2), alternating_group(2), p);
  EXPECT_TRUE(prod.contains(mpz_class(-1)));

  const PermGroup k = catalog_group("6T14");
  const IntPoly sextic = random_squarefree(rng, 6, 10);
  const auto r6 = roots_of(sextic);
  const auto params = ResolventParams::defaults(6);
  for (const auto& rep : coset_representatives(k)) {
    const ComplexBall a = resolvent_value(r6, rep, k, params);
    for (int t = 0; t < 5; ++t) {
      const auto& tau = k.elements()[(t * 37) % k.order()];
      EXPECT_TRUE(a.overlaps(resolvent_value(r6, rep * tau, k, params)));
    }
  }
  EXPECT_THROW(resolvent_value(quad, Permutation::identity(2), catalog_group("6T14"), params), std::invalid_argument);
}

TEST(BuildResolvent, DegreesMatchIndex) {
  std::mt19937_64 rng(11);
  struct Case {
    PermGroup k;
    int degree;
  };
  const std::vector<Case> cases = {
      {symmetric_group(6), 1}, {alternating_group(6), 2}, {catalog_group("6T12"), 12},
      {catalog_group("6T14"), 6}, {catalog_group("7T5"), 30}, {catalog_group("8T48"), 30},
  };
  for (const auto& c : cases) {
    const IntPoly f = random_squarefree(rng, c.k.degree(), 5);
    const ResolventPoly r = build_resolvent(f, c.k, ResolventParams::defaults(c.k.degree()));
    EXPECT_EQ(r.degree(), c.degree) << c.k.name();
    EXPECT_TRUE(r.poly.is_monic());
    EXPECT_LT(r.certified_radius, 0.5);
  }
}

TEST(BuildResolvent, QuadraticAlternatingMatchesDiscriminant) {
  for (long b = -6; b <= 6; ++b)
    for (long c = -6; c <= 6; ++c) {
      if (c == 0 || b * b - 4 * c == 0) continue;
      const IntPoly f{c, b, 1};
      const ResolventPoly r = build_resolvent(f, alternating_group(2), ResolventParams::defaults(2));
      ASSERT_EQ(r.degree(), 2);
      EXPECT_EQ(is_perfect_square(discriminant(r.poly)), is_perfect_square(b * b - 4 * c)) << b << " " << c;
    }
}

TEST(BuildResolvent, RejectsRepeatedRoots) {
  EXPECT_THROW(build_resolvent(IntPoly{1, 2, 1}, alternating_group(2), ResolventParams::defaults(2)),
               std::invalid_argument);
}

TEST(Separability, Examples) {
  EXPECT_TRUE(resolvent_is_separable(IntPoly{-1, 0, 1}));
  EXPECT_FALSE(resolvent_is_separable(IntPoly{0, 0, 1}));

  std::mt19937_64 rng(5);
  const PermGroup k = catalog_group("6T14");
  for (int t = 0; t < 10; ++t) {
    const IntPoly f = random_squarefree(rng, 6, 10);
    const ResolventPoly r = build_resolvent(f, k, ResolventParams::defaults(6));
    bool disjoint = true;
    for (std::size_t i = 0; i < r.values.size(); ++i)
      for (std::size_t j = i + 1; j < r.values.size(); ++j)
        if (r.values[i].overlaps(r.values[j])) disjoint = false;
    if (disjoint) EXPECT_TRUE(resolvent_is_separable(r));
    if (!resolvent_is_separable(r)) EXPECT_FALSE(disjoint);
  }
}

TEST(Separability, SearchIsDeterministic) {
  const IntPoly f{1, -3, 0, 0, 1};
  const PermGroup a4 = alternating_group(4);
  // the two A4 cosets separate only when the four exponents are distinct
  EXPECT_THROW(find_separable_params(f, a4, 3, mpz_class(3), 100), SearchExhausted);
  const ResolventParams p = find_separable_params(f, a4, 4, mpz_class(3));
  EXPECT_EQ(p.shift, 192);
  EXPECT_EQ(p.e, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(p, find_separable_params(f, a4, 4, mpz_class(3)));
  EXPECT_TRUE(resolvent_is_separable(build_resolvent(f, a4, p)));

  const ResolventParams q = find_separable_params(IntPoly{-2, 0, 1}, alternating_group(2), 2, mpz_class(2));
  EXPECT_TRUE(resolvent_is_separable(build_resolvent(IntPoly{-2, 0, 1}, alternating_group(2), q)));
}

TEST(Theta, InvariantUnderCatalogGenerators) {
  std::mt19937_64 rng(17);
  const PermGroup k = catalog_group("6T14");
  for (int t = 0; t < 100; ++t) {
    const auto roots = roots_of(random_squarefree(rng, 6, 20));
    const ComplexBall theta = stauduhar_theta(roots, Permutation::identity(6));
    for (const auto& g : k.generators()) {
      const ComplexBall diff = stauduhar_theta(roots, g) - theta;
      EXPECT_LT(diff.abs_upper().to_double(), 1e-20);
    }
  }
}

TEST(Theta, StabiliserIsCatalogGroup) {
  std::mt19937_64 rng(23);
  const auto roots = roots_of(random_squarefree(rng, 6, 7));
  const ComplexBall theta = stauduhar_theta(roots, Permutation::identity(6));
  const PermGroup k = catalog_group("6T14");
  const PermGroup s6 = symmetric_group(6);
  for (const auto& s : s6.elements())
    EXPECT_EQ(stauduhar_theta(roots, s).overlaps(theta), k.contains(s)) << s.to_string();
}

TEST(Theta, RootsOfUnity) {
  const auto roots = roots_of(IntPoly{-1, 0, 0, 0, 0, 0, 1});
  const ComplexBall theta = stauduhar_theta(roots, Permutation::identity(6));
  EXPECT_LT(theta.radius_upper().to_double(), 1e-30);
  EXPECT_THROW(stauduhar_theta(std::span(roots).first(5), Permutation::identity(6)), std::invalid_argument);
}

TEST(Psi, SignMapRoundTrips) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    const IntPoly f = random_squarefree(rng, 6, 30);
    EXPECT_EQ(monic_from_alternating(alternating_from_monic(f)), f);
  }
  const SexticCoeffs a{mpz_class(1), mpz_class(2), mpz_class(3), mpz_class(4), mpz_class(5), mpz_class(6)};
  EXPECT_EQ(monic_from_alternating(a), IntPoly::parse("1,-1,2,-3,4,-5,6"));
  EXPECT_EQ(alternating_from_monic(monic_from_alternating(a)), a);
}

TEST(Psi, IntegralMonicSextic) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const IntPoly f = random_squarefree(rng, 6, 20);
    const ResolventPoly psi = stauduhar_resolvent(f);
    EXPECT_EQ(psi.degree(), 6);
    EXPECT_TRUE(psi.poly.is_monic());
    EXPECT_LT(psi.certified_radius, 0.5);
  }
}

TEST(Psi, IntegerRootTest) {
  const auto s6 = stauduhar_integer_root_test(IntPoly::parse("1,0,0,0,0,1,1"));
  EXPECT_EQ(s6.outcome, RootOutcome::certified_no_root);

  // x^5 - x - 1 has group S5, so its sextic lands in 6T14
  const IntPoly pgl = sextic_from_quintic(IntPoly::parse("1,0,0,0,-1,-1"));
  ASSERT_EQ(pgl.degree(), 6);
  ASSERT_NE(discriminant(pgl), 0);
  EXPECT_FALSE(is_perfect_square(discriminant(pgl)));
  const auto hit = stauduhar_integer_root_test(pgl);
  ASSERT_EQ(hit.outcome, RootOutcome::certified_root);
  EXPECT_EQ(hit.psi->poly.eval(*hit.root), 0);
  EXPECT_FALSE(hit.height_violation);

  // x^5 + 20x + 16 has group A5, giving 6T12
  const IntPoly psl = sextic_from_quintic(IntPoly::parse("1,0,0,0,20,16"));
  EXPECT_TRUE(is_perfect_square(discriminant(psl)));
  EXPECT_EQ(stauduhar_integer_root_test(psl).outcome, RootOutcome::certified_root);

  EXPECT_THROW(stauduhar_integer_root_test(IntPoly::parse("1,0,0,0,0,0,0")), std::invalid_argument);
}

TEST(Psi, JsonShape) {
  const ResolventPoly psi = stauduhar_resolvent(IntPoly::parse("1,0,0,0,0,1,1"));
  const auto j = to_json(psi);
  EXPECT_EQ(j["degree"], 6);
  EXPECT_EQ(j["coefficients"].size(), 7u);
  EXPECT_EQ(j["coefficients"][0], "1");
  EXPECT_EQ(j["source"], "1,0,0,0,0,1,1");
}

TEST(Surface, LeadingA5Term) {
  const MultiPoly g = interpolate_surface(0, 0, 0);
  EXPECT_EQ(g.coeff({12, 0, 0}), 1024);
  EXPECT_EQ(g.total_degree(), 12);
  EXPECT_EQ(g.coeff({0, 0, 6}), 1);
}

TEST(Surface, TripleBookkeeping) {
  const auto ok = surface_triple_status(1, 0, 1);
  EXPECT_TRUE(ok.a2_nonzero);
  EXPECT_FALSE(ok.s_factor.has_value());
  EXPECT_FALSE(ok.nondegenerate.has_value());
  const auto bad = surface_triple_status(0, 2, 3);
  EXPECT_FALSE(bad.a2_nonzero);
  EXPECT_EQ(bad.nondegenerate, false);
}
