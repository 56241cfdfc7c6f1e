#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include <mckay/cyclotomic.hpp>

using namespace mckay;

namespace {

std::complex<double> eval(Cyclotomic const& z) {
  std::complex<double> s = 0;
  auto const e = z.conductor();
  for (std::size_t k = 0; k < z.coefficients().size(); ++k) {
    double c = static_cast<double>(z.coefficients()[k]);
    double ang = 2.0 * M_PI * static_cast<double>(k) / e;
    s += c * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::complex<double> root(std::uint32_t e, std::int64_t k) {
  double ang = 2.0 * M_PI * static_cast<double>(k) / e;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

TEST(Cyclotomic, BasicIdentities) {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ(z3 + z3 * z3, Cyclotomic(-1));
  EXPECT_EQ((z3 + z3 * z3).to_string(), "-1");
  auto i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(7, 7), Cyclotomic(1));
  EXPECT_TRUE((z3 - z3).is_zero());
}

TEST(Cyclotomic, SquareRootOfFive) {
  auto z = [](int k) { return Cyclotomic::root_of_unity(5, k); };
  auto s = z(1) - z(2) - z(3) + z(4);
  EXPECT_EQ(s * s, Cyclotomic(5));
  // golden ratio from A5 tables: -z^2 - z^3 = (1 + sqrt5)/2
  auto b5 = -z(2) - z(3);
  EXPECT_EQ(b5 * b5, b5 + Cyclotomic(1));
}

TEST(Cyclotomic, ConductorNormalization) {
  auto z6 = Cyclotomic::root_of_unity(6, 1);
  EXPECT_EQ(z6.conductor(), 3u);
  EXPECT_EQ(z6, -Cyclotomic::root_of_unity(3, 2));
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 1).conductor(), 1u);
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 4), Cyclotomic::root_of_unity(3, 1));
}

TEST(Cyclotomic, MixedConductors) {
  auto a = Cyclotomic::root_of_unity(3, 1);
  auto b = Cyclotomic::root_of_unity(4, 1);
  auto c = a * b;
  EXPECT_EQ(c, Cyclotomic::root_of_unity(12, 7));
  EXPECT_NEAR(std::abs(eval(a + b) - (root(3, 1) + root(4, 1))), 0.0, 1e-12);
}

TEST(Cyclotomic, ConjugationAndGalois) {
  auto z = Cyclotomic::root_of_unity(8, 1);
  EXPECT_EQ(z * z.conj(), Cyclotomic(1));
  EXPECT_EQ(z.galois(3), Cyclotomic::root_of_unity(8, 3));
  auto r = Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, 6);
  EXPECT_EQ(r.conj(), r);
}

TEST(Cyclotomic, RandomArithmeticAgreesWithComplexEvaluation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<std::uint32_t> conductors{1, 3, 4, 5, 7, 8, 9, 12, 15, 20};
  for (int trial = 0; trial < 200; ++trial) {
    auto pick = [&] {
      auto e = conductors[rng() % conductors.size()];
      std::vector<Rational> c(e);
      for (auto& x : c) x = Rational(coef(rng), 1 + (rng() % 3));
      return Cyclotomic::from_powers(e, c);
    };
    auto a = pick(), b = pick();
    EXPECT_NEAR(std::abs(eval(a * b) - eval(a) * eval(b)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(eval(a + b) - (eval(a) + eval(b))), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(eval(a.conj()) - std::conj(eval(a))), 0.0, 1e-8);
    EXPECT_EQ(Cyclotomic::parse(a.to_string()), a);
  }
}

TEST(Cyclotomic, TextFormat) {
  EXPECT_EQ(Cyclotomic().to_string(), "0");
  EXPECT_EQ(Cyclotomic(Rational(-3, 2)).to_string(), "-3/2");
  auto z = Cyclotomic::root_of_unity(5, 2);
  EXPECT_EQ(z.to_string(), "1*z(5)^2");
  EXPECT_EQ(Cyclotomic::parse("2 + -1*z(5)^3"), Cyclotomic(2) - Cyclotomic::root_of_unity(5, 3));
  EXPECT_EQ(Cyclotomic::parse("z(4)"), Cyclotomic::root_of_unity(4, 1));
  EXPECT_THROW(Cyclotomic::parse("1 + q"), Error);
  EXPECT_THROW(Cyclotomic::parse(""), Error);
}

TEST(Cyclotomic, ConductorOverflow) {
  try {
    Cyclotomic::root_of_unity(10007, 1);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConductorOverflow);
  }
  // 9973 and 9967 are prime: their lcm exceeds the bound
  EXPECT_THROW(Cyclotomic::root_of_unity(9973, 1) * Cyclotomic::root_of_unity(9967, 1), Error);
}
