#include <gtest/gtest.h>

#include <random>

#include "galcount/ball.hpp"
#include "galcount/factor.hpp"
#include "galcount/int_poly.hpp"
#include "galcount/modp.hpp"
#include "galcount/multi_poly.hpp"
#include "galcount/primes.hpp"
#include "galcount/rat_poly.hpp"
#include "galcount/roots.hpp"

using namespace galcount;

namespace {

// Fraction-free Gaussian elimination on the Sylvester matrix.
mpz_class sylvester_determinant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree(), size = m + n;
  std::vector<std::vector<mpz_class>> a(size, std::vector<mpz_class>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size; ++k) {
    int piv = k;
    while (piv < size && a[piv][k] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

IntPoly random_poly(std::mt19937_64& rng, int degree, long lo, long hi, bool monic) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<mpz_class> c(degree + 1);
  for (auto& x : c) x = d(rng);
  if (monic) c[degree] = 1;
  while (c[degree] == 0) c[degree] = d(rng);
  return IntPoly(std::move(c));
}

ZpPoly zp(std::uint64_t p, std::vector<std::uint64_t> c) { return ZpPoly(p, std::move(c)); }

// All monic irreducibles over F_2 up to degree 3, by exhaustive root-free check.
CycleType brute_force_degrees_mod2(ZpPoly f) {
  std::vector<ZpPoly> irreducible = {zp(2, {0, 1}), zp(2, {1, 1}), zp(2, {1, 1, 1}), zp(2, {1, 1, 0, 1}),
                                     zp(2, {1, 0, 1, 1})};
  CycleType type;
  for (const auto& g : irreducible)
    while (f.degree() >= g.degree() && (f % g).is_zero()) {
      type.push_back(g.degree());
      f = f / g;
    }
  // a cofactor of degree <= 6 with no factor of degree <= 3 is irreducible
  if (f.degree() > 0) type.push_back(f.degree());
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool brute_force_reducible(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return false;
  if (f.coeff(0) == 0) return true;
  // a monic factor g of degree d has |g_j| <= binom(d, j) ||f||_2 and g_0 | f_0
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  const long bound = norm.get_si() + 1;
  const long f0 = std::labs(f.coeff(0).get_si());
  std::vector<long> divisors;
  for (long q = 1; q <= f0; ++q)
    if (f0 % q == 0) {
      divisors.push_back(q);
      divisors.push_back(-q);
    }
  for (int d = 1; d <= n / 2; ++d) {
    // coefficients g_1 .. g_(d-1); binom(d, j) <= 2^d
    const long b = (1L << d) * bound;
    std::vector<long> mid(d - 1, -b);
    for (;;) {
      for (long g0 : divisors) {
        std::vector<mpz_class> coeffs{mpz_class(g0)};
        for (long v : mid) coeffs.emplace_back(v);
        coeffs.emplace_back(1);
        try {
          divexact(f, IntPoly(std::move(coeffs)));
          return true;
        } catch (const std::domain_error&) {
        }
      }
      int k = 0;
      while (k < d - 1 && mid[k] == b) mid[k++] = -b;
      if (k == d - 1) break;
      ++mid[k];
    }
  }
  return false;
}

}  // namespace

TEST(IntPoly, ParseAndPrint) {
  const auto f = IntPoly::parse("1,0,0,0,0,1,3");
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.to_text(), "1,0,0,0,0,1,3");
  EXPECT_EQ(f.to_string(), "x^6 + x + 3");
  EXPECT_EQ(IntPoly::parse(" -2, 0 ,5").to_string(), "-2x^2 + 5");
  EXPECT_THROW(IntPoly::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(IntPoly::parse("1,a"), std::invalid_argument);
  const std::vector<mpz_class> tail = {0, -2, 3};
  EXPECT_EQ(IntPoly::from_monic_tail(tail), IntPoly({3, -2, 0, 1}));
}

TEST(IntPoly, Arithmetic) {
  const IntPoly a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, IntPoly({-1, 0, 1}));
  EXPECT_EQ(divexact(a * b, b), a);
  EXPECT_THROW(divexact(IntPoly({1, 0, 1}), b), std::domain_error);
  EXPECT_EQ(gcd(a * b, a * a), a);
  EXPECT_EQ(IntPoly({6, 4, 2}).content(), 2);
  EXPECT_EQ(IntPoly({1, 2, 3}).derivative(), IntPoly({2, 6}));
}

TEST(Resultant, SmallCases) {
  // Sylvester convention: Res(x - 2, x - 5) = det [[1, -2], [1, -5]] = -3
  EXPECT_EQ(resultant(IntPoly{-2, 1}, IntPoly{-5, 1}), -3);
  EXPECT_EQ(resultant(IntPoly{-2, 1}, IntPoly{-5, 1}), sylvester_determinant(IntPoly{-2, 1}, IntPoly{-5, 1}));
  EXPECT_EQ(resultant(IntPoly{1, 0, 1}, IntPoly{0, 1}), 1);
  EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), std::invalid_argument);
  // common root
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}), 0);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8), n = 1 + static_cast<int>(rng() % 8);
    const IntPoly f = random_poly(rng, m, -30, 30, false);
    const IntPoly g = random_poly(rng, n, -30, 30, false);
    EXPECT_EQ(resultant(f, g), sylvester_determinant(f, g)) << f.to_string() << " | " << g.to_string();
  }
}

TEST(Discriminant, ClosedForms) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const mpz_class b = d(rng), c = d(rng), p = d(rng), q = d(rng);
    const std::vector<mpz_class> quad = {b, c}, cubic = {0, p, q};
    EXPECT_EQ(discriminant(std::span<const mpz_class>(quad)), b * b - 4 * c);
    EXPECT_EQ(discriminant(std::span<const mpz_class>(cubic)), -4 * p * p * p - 27 * q * q);
  }
  EXPECT_EQ(discriminant(IntPoly::parse("1,0,0,0,0,0,1")), -46656);
  const std::vector<mpz_class> one = {mpz_class(1)};
  EXPECT_THROW(discriminant(std::span<const mpz_class>(one)), std::invalid_argument);
  // Res(f, f') for the depressed cubic carries the sign (-1)^3
  EXPECT_EQ(resultant(IntPoly{5, 2, 0, 1}, IntPoly{5, 2, 0, 1}.derivative()), 4 * 8 + 27 * 25);
}

TEST(Discriminant, MatchesRootProductInBallArithmetic) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 1000) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const IntPoly f = random_poly(rng, n, -50, 50, true);
    const mpz_class disc = discriminant(f);
    if (disc == 0) continue;
    const auto iso = complex_roots_certified(f, 1e-30);
    ComplexBall prod(mpz_class(1), iso.precision);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const ComplexBall diff = iso.roots[i] - iso.roots[j];
        prod = prod * diff * diff;
      }
    ASSERT_TRUE(prod.contains(disc)) << f.to_string() << " disc " << disc.get_str() << " ball "
                                     << prod.to_string();
    ++checked;
  }
}

TEST(Primes, Sieve) {
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(first_primes(25).back(), 97u);
  EXPECT_EQ(primes_up_to(1000).size(), 168u);
  EXPECT_TRUE(is_prime(2147483647ull));
}

TEST(FactorModP, Examples) {
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 0, 1}, 5), (CycleType{1, 1}));
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 0, 1}, 3), (CycleType{2}));
  EXPECT_EQ(factor_degrees_mod_p(IntPoly{1, 0, 1}, 2), std::nullopt);
  EXPECT_THROW(factor_degrees_mod_p(IntPoly{1, 0, 3}, 3), std::invalid_argument);
  const IntPoly f = IntPoly::parse("1,0,0,0,0,1,1");
  const auto type = factor_degrees_mod_p(f, 2);
  ASSERT_TRUE(type.has_value());
  EXPECT_EQ(*type, brute_force_degrees_mod2(ZpPoly::from_int_poly(f, 2)));
}

TEST(FactorModP, BruteForceOverF2) {
  // every squarefree monic polynomial of degree <= 6 over F_2
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<mpz_class> c(n + 1);
      c[n] = 1;
      for (int i = 0; i < n; ++i) c[i] = (bits >> i) & 1;
      const IntPoly f(c);
      const auto type = factor_degrees_mod_p(f, 2);
      const ZpPoly fp = ZpPoly::from_int_poly(f, 2);
      if (!is_squarefree(fp)) {
        EXPECT_FALSE(type.has_value());
        continue;
      }
      ASSERT_TRUE(type.has_value());
      const CycleType brute = brute_force_degrees_mod2(fp);
      // the oracle only knows factors of degree <= 3, so a leftover of degree > 3 is one irreducible
      EXPECT_EQ(*type, brute) << f.to_string();
    }
}

TEST(FactorModP, FastPathAgreesWithGeneric) {
  std::mt19937_64 rng(17);
  const auto ps = primes_up_to(2000);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::int64_t> tail(n);
    for (auto& v : tail) v = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::uint32_t p = ps[rng() % ps.size()];
    std::vector<mpz_class> big;
    for (auto v : tail) big.emplace_back(static_cast<long>(v));
    const IntPoly f = IntPoly::from_monic_tail(std::span<const mpz_class>(big));
    const auto fast = factor_degrees_mod_p(std::span<const std::int64_t>(tail), p);
    const auto slow = factor_degrees_mod_p(f, p);
    ASSERT_EQ(fast, slow) << f.to_string() << " mod " << p;
    if (fast) {
      int sum = 0;
      for (int d : *fast) sum += d;
      EXPECT_EQ(sum, n);
    }
  }
}

TEST(FactorModP, CantorZassenhausSplits) {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 101ull}) {
    for (int trial = 0; trial < 30; ++trial) {
      const IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 7), -50, 50, true);
      const ZpPoly fp = ZpPoly::from_int_poly(f, p);
      if (!is_squarefree(fp)) continue;
      const auto parts = factor_squarefree(fp, rng);
      ZpPoly prod(p, {1});
      for (const auto& g : parts) {
        prod = prod * g;
        EXPECT_EQ(distinct_degree_factor(g).size(), 1u);
        EXPECT_EQ(distinct_degree_factor(g)[0].first, g.degree());
      }
      EXPECT_EQ(prod, fp.monic());
    }
  }
}

TEST(Irreducibility, Examples) {
  EXPECT_FALSE(is_irreducible_over_Q(IntPoly::parse("1,0,0,0,0,0,-1")));
  EXPECT_TRUE(is_irreducible_over_Q(IntPoly::parse("1,0,-2")));
  EXPECT_TRUE(is_irreducible_over_Q(IntPoly::parse("1,0,0,0,0,1,1")));
  // x^4 + 1 is irreducible over Q but reducible mod every prime
  EXPECT_TRUE(is_irreducible_over_Q(IntPoly::parse("1,0,0,0,1")));
  // (x^2 + x + 1)(x^2 - 3)
  EXPECT_FALSE(is_irreducible_over_Q(IntPoly::parse("1,1,-2,-3,-3")));
  // non-squarefree
  EXPECT_FALSE(is_irreducible_over_Q(IntPoly::parse("1,2,1")));
  EXPECT_TRUE(is_irreducible_over_Q(IntPoly::parse("3,5")));
}

TEST(Irreducibility, BruteForceDegreeUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 11;
    for (long code = 0; code < total; ++code) {
      std::vector<mpz_class> c(n + 1);
      c[n] = 1;
      long rest = code;
      for (int i = 0; i < n; ++i) {
        c[i] = rest % 11 - 5;
        rest /= 11;
      }
      const IntPoly f(c);
      ASSERT_EQ(is_irreducible_over_Q(f), !brute_force_reducible(f)) << f.to_string();
    }
  }
}

TEST(Zassenhaus, RecoversRandomProducts) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly prod{1};
    std::vector<IntPoly> parts;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 4), -9, 9, rng() % 3 != 0);
      prod = prod * g;
    }
    if (gcd(prod, prod.derivative()).degree() > 0) continue;
    const auto factors = factor_squarefree_over_Z(prod);
    IntPoly back{1};
    for (const auto& g : factors) {
      back = back * g;
      EXPECT_TRUE(is_irreducible_over_Q(g)) << g.to_string();
    }
    EXPECT_EQ(back, prod.primitive_part()) << prod.to_string();
  }
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 splits into quadratics mod every prime
  EXPECT_EQ(factor_squarefree_over_Z(IntPoly::parse("1,0,-10,0,1")).size(), 1u);
  EXPECT_EQ(factor_squarefree_over_Z(IntPoly::parse("1,0,0,0,0,0,-1")).size(), 4u);
  EXPECT_THROW(factor_squarefree_over_Z(IntPoly::parse("1,2,1")), std::invalid_argument);
}

TEST(SubsetSums, Mask) {
  EXPECT_EQ(subset_sum_mask({6}), (1u | (1u << 6)));
  EXPECT_EQ(subset_sum_mask({2, 1}), 0b1111u);
}

TEST(PolySquareRoot, Examples) {
  const auto s = poly_square_root(RatPoly{1, 2, 1});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (RatPoly{1, 1}));
  EXPECT_FALSE(poly_square_root(RatPoly{1, 0, 1}).has_value());
  const auto t = poly_square_root(RatPoly{9, 0, -12, 0, 4});
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (RatPoly{-3, 0, 2}));
  EXPECT_FALSE(poly_square_root(RatPoly{0, 1}).has_value());
  EXPECT_FALSE(poly_square_root(RatPoly{2}).has_value());
  EXPECT_THROW(poly_square_root(RatPoly{}), std::invalid_argument);
}

TEST(PolySquareRoot, RoundTripsRandomSquares) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const int deg = static_cast<int>(rng() % 11);
    std::vector<mpq_class> c(deg + 1);
    for (auto& x : c) x = mpq_class(num(rng), den(rng));
    while (c[deg] == 0) c[deg] = mpq_class(num(rng), den(rng));
    const RatPoly s(c);
    const auto r = poly_square_root(s * s);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(*r == s || *r == RatPoly{} - s);
    // perturbing the constant term destroys squareness
    if (deg >= 1) EXPECT_FALSE(poly_square_root(s * s + RatPoly{mpq_class(1, 7)}).has_value());
  }
}

TEST(RatPoly, Interpolation) {
  const std::vector<mpq_class> xs = {0, 1, 2, 3}, ys = {1, 2, 9, 28};
  EXPECT_EQ(RatPoly::interpolate(xs, ys), (RatPoly{1, 0, 0, 1}));
  const std::vector<mpq_class> dup = {1, 1};
  EXPECT_THROW(RatPoly::interpolate(dup, std::vector<mpq_class>{1, 2}), std::invalid_argument);
}

TEST(Balls, ContainmentUnderArithmetic) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 997);
  for (int trial = 0; trial < 500; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<mpq_class> c(deg + 1);
    for (auto& x : c) x = mpq_class(num(rng), den(rng));
    for (auto& x : c) x.canonicalize();
    const mpq_class t(num(rng), den(rng));
    mpq_class exact = 0;
    Ball acc(static_cast<mpfr_prec_t>(64));
    const Ball bt(t, 64);
    for (int k = deg; k >= 0; --k) {
      exact = exact * t + c[k];
      acc = acc * bt + Ball(c[k], 64);
    }
    ASSERT_TRUE(acc.contains(exact)) << acc.to_string();
    const Ball q = acc / Ball(mpq_class(3, 7), 64);
    EXPECT_TRUE(q.contains(mpq_class(exact * 7 / 3)));
  }
  EXPECT_THROW(Ball(1, 64) / Ball(0, 64), std::domain_error);
  const ComplexBall i(Ball(0, 64), Ball(1, 64));
  EXPECT_TRUE((i * i).contains(mpz_class(-1)));
  EXPECT_EQ((i * i).unique_integer(), mpz_class(-1));
  EXPECT_TRUE(i.pow(4).contains(mpz_class(1)));
}

TEST(Roots, Certified) {
  const auto two = complex_roots_certified(IntPoly{-1, 0, 1}, 1e-30);
  ASSERT_EQ(two.roots.size(), 2u);
  EXPECT_TRUE(two.roots[0].contains(mpz_class(-1)));
  EXPECT_TRUE(two.roots[1].contains(mpz_class(1)));

  const auto six = complex_roots_certified(IntPoly::parse("1,0,0,0,0,0,-2"), 1e-40);
  ASSERT_EQ(six.roots.size(), 6u);
  Mpfr expected(256), modulus(256), t(256);
  mpfr_set_ui(expected.get(), 2, MPFR_RNDN);
  mpfr_rootn_ui(expected.get(), expected.get(), 6, MPFR_RNDN);
  for (const auto& r : six.roots) {
    mpfr_sqr(modulus.get(), r.re().mid().get(), MPFR_RNDN);
    mpfr_sqr(t.get(), r.im().mid().get(), MPFR_RNDN);
    mpfr_add(modulus.get(), modulus.get(), t.get(), MPFR_RNDN);
    mpfr_sqrt(modulus.get(), modulus.get(), MPFR_RNDN);
    mpfr_sub(modulus.get(), modulus.get(), expected.get(), MPFR_RNDN);
    EXPECT_LT(std::fabs(modulus.to_double()), 1e-20);
    EXPECT_LE(r.radius_upper().to_double(), 2e-40);
  }
  // Vieta for a traceless sextic
  const auto tr = complex_roots_certified(IntPoly::parse("1,0,-3,5,-7,2,11"), 1e-30);
  ComplexBall sum(tr.precision);
  for (const auto& r : tr.roots) sum = sum + r;
  EXPECT_TRUE(sum.contains(mpz_class(0)));
  for (std::size_t i = 0; i < tr.roots.size(); ++i)
    for (std::size_t j = i + 1; j < tr.roots.size(); ++j) EXPECT_FALSE(tr.roots[i].overlaps(tr.roots[j]));
  EXPECT_THROW(complex_roots_certified(IntPoly{1, 2, 1}, 1e-10), std::invalid_argument);
}

TEST(GenericDiscriminant, SmallDegrees) {
  const auto& d2 = generic_discriminant(2);
  const auto names = std::vector<std::string>{"b", "c"};
  EXPECT_EQ(d2, MultiPoly::parse("b^2 - 4*c", names));
  const auto& d3 = generic_discriminant(3);
  const std::vector<std::string> abc = {"a1", "a2", "a3"};
  // traceless slice recovers -4p^3 - 27q^2
  for (const auto& [e, c] : d3.terms())
    if (e[0] == 0) {
      if (e == MultiPoly::Exponents{0, 3, 0}) EXPECT_EQ(c, -4);
      else if (e == MultiPoly::Exponents{0, 0, 2}) EXPECT_EQ(c, -27);
      else ADD_FAILURE() << "unexpected traceless term";
    }
  EXPECT_EQ(d3.total_degree(), 4);
  EXPECT_EQ(generic_discriminant(6).total_degree(), 10);
  EXPECT_THROW(generic_discriminant(9), std::invalid_argument);
}

TEST(GenericDiscriminant, BoxBound) {
  EXPECT_GE(discriminant_box_bound(2, 1), 5);
  for (long b = -1; b <= 1; ++b)
    for (long c = -1; c <= 1; ++c) EXPECT_LE(abs(mpz_class(b * b - 4 * c)), discriminant_box_bound(2, 1));
  EXPECT_GE(discriminant_box_bound(3, 10), 6700);
  for (int n = 2; n <= 6; ++n) {
    mpz_class ratio;
    mpz_ui_pow_ui(ratio.get_mpz_t(), 10, 2 * n - 2);
    EXPECT_EQ(discriminant_box_bound(n, 70), discriminant_box_bound(n, 7) * ratio);
  }
  EXPECT_THROW(discriminant_box_bound(3, 0), std::invalid_argument);
}

TEST(MultiPoly, ParseEvalPrint) {
  const std::vector<std::string> names = {"x1", "x2"};
  const auto f = MultiPoly::parse("x1^2 - x2 + 3*x1*x2^2", names);
  const std::vector<mpz_class> pt = {2, 5};
  EXPECT_EQ(f.eval(pt), 4 - 5 + 3 * 2 * 25);
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_EQ(MultiPoly::parse(f.to_string(names), names), f);
  EXPECT_THROW(MultiPoly::parse("x3", names), std::invalid_argument);
  EXPECT_EQ(f.specialize_to_univariate(pt, 1), (std::vector<mpz_class>{4, -1, 6}));
}
