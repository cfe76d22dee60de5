#include <gtest/gtest.h>

#include <cmath>

#include "galcount/exponents.hpp"

using namespace galcount;

TEST(Exponents, ClosedForms) {
  EXPECT_EQ(sigma(6), 2);
  EXPECT_EQ(sigma(7), mpq_class(9, 4));
  EXPECT_EQ(sigma(8), mpq_class(5, 2));
  EXPECT_EQ(delta(6), mpq_class(19, 10));
  EXPECT_EQ(delta(2), mpq_class(1, 2));
  EXPECT_EQ(omega(6), mpq_class(61, 32));
  EXPECT_DOUBLE_EQ(omega(6).get_d(), 1.90625);
  EXPECT_THROW(sigma(1), std::invalid_argument);
}

TEST(Exponents, StrictChain) {
  for (int n = 3; n <= 158; ++n) {
    EXPECT_LT(delta(n), omega(n)) << n;
    EXPECT_LT(omega(n), sigma(n)) << n;
  }
  EXPECT_LT(mpq_class(omega(60) - delta(60)).get_d(), 1e-15);
}

TEST(Exponents, BhargavaB) {
  EXPECT_EQ(bhargava_B(catalog_group("6T14")), mpq_class(3, 2));
  EXPECT_EQ(bhargava_B(catalog_group("7T5")), mpq_class(7, 4));
  EXPECT_EQ(bhargava_B(catalog_group("8T48")), 2);
  EXPECT_THROW(bhargava_B(PermGroup::generated_by({Permutation::parse(3, "(1 2)")})), std::invalid_argument);
}

TEST(Exponents, MainE) {
  EXPECT_EQ(main_E(catalog_group("6T14")).to_decimal(2), "1.42");
  EXPECT_EQ(main_E(catalog_group("6T12")).to_decimal(2), "1.36");
  EXPECT_EQ(main_E(catalog_group("7T5")).to_decimal(2), "1.56");
  EXPECT_EQ(main_E(catalog_group("8T48")).to_decimal(2), "1.81");
  const Surd e = main_E(catalog_group("6T14"));
  EXPECT_EQ(e.r, mpq_class(6, 5));
  EXPECT_EQ(e.s, mpq_class(1, 20));
  EXPECT_EQ(e.to_exact(), "6/5 + sqrt(1/20)");
  EXPECT_THROW(main_E(symmetric_group(6)), std::invalid_argument);
  EXPECT_THROW(main_E(symmetric_group(5)), std::invalid_argument);
}

TEST(Exponents, RecordTable) {
  const auto rows = record_table();
  ASSERT_EQ(rows.size(), 4u);
  const struct {
    const char* label;
    double B;
    const char* E;
    std::uint64_t order;
    bool even;
  } expected[] = {
      {"6T12", 1.5, "1.36", 60, true},
      {"6T14", 1.5, "1.42", 120, false},
      {"7T5", 1.75, "1.56", 168, true},
      {"8T48", 2, "1.81", 1344, true},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].label, expected[i].label);
    EXPECT_EQ(rows[i].B.get_d(), expected[i].B);
    EXPECT_EQ(rows[i].E.to_decimal(2), expected[i].E);
    EXPECT_EQ(rows[i].order, expected[i].order);
    EXPECT_EQ(rows[i].even, expected[i].even);
    EXPECT_EQ(rows[i].a, mpq_class(1, 2));
    EXPECT_TRUE(rows[i].E < rows[i].B);
  }
}

TEST(Exponents, BnAndNn) {
  for (int d = 1; d < 50; ++d) EXPECT_TRUE(bound_Bn(6, d + 1) < bound_Bn(6, d));
  for (int n = 3; n < 60; ++n) {
    EXPECT_LT(bound_Nn(n + 1), bound_Nn(n));
    EXPECT_GT(bound_Nn(n), mpq_class(1, 4));
  }
  EXPECT_TRUE(bound_Bn(6, 6) < bound_Nn(6));
  EXPECT_FALSE(bound_Nn(6) < bound_Bn(6, 6));
}

TEST(Exponents, SurdComparisons) {
  const Surd a{mpq_class(1), mpq_class(2)};   // 2.414
  const Surd b{mpq_class(0), mpq_class(6)};   // 2.449
  const Surd c{mpq_class(2), mpq_class(1, 9)};  // 2.333
  EXPECT_TRUE(a < b);
  EXPECT_FALSE(b < a);
  EXPECT_TRUE(c < a);
  EXPECT_FALSE(a < c);
  EXPECT_TRUE(c < b);
  EXPECT_TRUE(a < mpq_class(5, 2));
  EXPECT_FALSE(a < mpq_class(12, 5));
  EXPECT_TRUE(mpq_class(12, 5) < a);
}

TEST(Exponents, ImprimitiveBound) {
  EXPECT_EQ(imprimitive_bound(6), mpq_class(5, 4));
  EXPECT_EQ(imprimitive_bound(8), mpq_class(3, 2));
  for (const char* name : {"6T12", "6T14"}) EXPECT_FALSE(main_E(catalog_group(name)) < imprimitive_bound(6));
  EXPECT_THROW(imprimitive_bound(7), std::invalid_argument);
}

TEST(Exponents, BestKnown) {
  EXPECT_EQ(best_known_exponent(5).value, 1.0);
  EXPECT_DOUBLE_EQ(best_known_exponent(100).value, omega(100).get_d());
  const double l = std::log(200.0);
  EXPECT_DOUBLE_EQ(best_known_exponent(200).value, 1.564 * l * l);
  // the two published bounds cross exactly between 158 and 159
  const double l158 = std::log(158.0), l159 = std::log(159.0);
  EXPECT_LT(omega(158).get_d(), 1.564 * l158 * l158);
  EXPECT_GT(omega(159).get_d(), 1.564 * l159 * l159);
  EXPECT_EQ(historical_bounds().size(), 4u);
}

TEST(Exponents, SchmidtBox) {
  const auto box = schmidt_box(6, mpz_class("10000000000"));
  EXPECT_EQ(box, (std::vector<mpz_class>{100, 1000, 10000, 100000, 1000000}));
  EXPECT_EQ(schmidt_box(3, 16), (std::vector<mpz_class>{4, 8}));
  EXPECT_EQ(schmidt_box(6, 1000), (std::vector<mpz_class>{3, 7, 15, 31, 63}));
  EXPECT_EQ(schmidt_box(6, 1), (std::vector<mpz_class>{1, 1, 1, 1, 1}));
  // the exponents j/(2n-2), j = 2..n, add up to sigma_n
  for (int n = 2; n <= 20; ++n) {
    mpq_class total = 0;
    for (int j = 2; j <= n; ++j) total += mpq_class(j, 2 * n - 2);
    total.canonicalize();
    EXPECT_EQ(total, sigma(n));
  }
}

TEST(Exponents, LopsidedPredictions) {
  const mpz_class h = 1000;
  const auto p = bp_prediction({{2, 0}, {0, 1}}, h, h);
  EXPECT_EQ(p.T, h * h);
  EXPECT_NEAR(p.prediction, std::sqrt(1000.0), 1e-9);
  EXPECT_DOUBLE_EQ(bp_prediction({{2, 0}, {0, 1}}, 1, h).prediction, 1.0);
  const auto q1 = bp_prediction({{3, 1}, {1, 2}}, 50, 700);
  const auto q2 = bp_prediction({{1, 3}, {2, 1}}, 700, 50);
  EXPECT_EQ(q1.T, q2.T);
  EXPECT_DOUBLE_EQ(q1.prediction, q2.prediction);
  EXPECT_THROW(bp_prediction({{1, 1}}, 1, 1), std::domain_error);
  EXPECT_THROW(bp_prediction({}, 2, 2), std::invalid_argument);

  const auto s = salberger_prediction({{1, 1, 1}}, 100, 100, 100);
  EXPECT_EQ(s.T, 1000000);
  EXPECT_NEAR(s.prediction, std::exp(std::sqrt(std::pow(std::log(100.0), 3) / std::log(1e6))), 1e-9);
}
