#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace mckay;
using namespace testgroups;

namespace {

// Closure by repeated multiplication, independent of the stabilizer chain.
std::set<Permutation> brute_closure(std::size_t degree, std::vector<Permutation> const& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Classes by direct conjugation of every element by every element.
std::multiset<std::uint64_t> brute_class_sizes(PermGroup const& G) {
  std::set<Permutation> done;
  std::multiset<std::uint64_t> sizes;
  for (auto const& x : G.elements()) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (auto const& g : G.elements()) cls.insert(x.conjugate_by(g));
    done.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

}  // namespace

TEST(Permutation, CycleNotationRoundTrip) {
  auto p = cyc(6, "(3,1,2)(5,6)");
  EXPECT_EQ(p.to_string(), "(1,2,3)(5,6)");
  EXPECT_EQ(Permutation::identity(4).to_string(), "()");
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(Permutation, NonDisjointCyclesComposeLeftToRight) {
  // (1,2) then (2,3): 1->2->3, 2->1, 3->2
  auto p = cyc(3, "(1,2)(2,3)");
  EXPECT_EQ(p.to_string(), "(1,3,2)");
}

TEST(Permutation, Errors) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), Error);
  try {
    cyc(4, "(1,5)");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CycleOutOfRange);
  }
}

TEST(PermGroup, OrdersMatchBruteClosure) {
  std::vector<std::pair<PermGroup, std::uint64_t>> cases = {
      {S4(), 24},   {A4(), 12},   {D8(), 8},     {Q8(), 8},      {SL23(), 24},
      {C3C4(), 12}, {C7C3(), 21}, {C3sqC2(), 18}, {S3xS3(), 36}, {A5(), 60},
      {ASL23(), 216}, {PSL28(), 504}};
  for (auto const& [G, n] : cases) {
    EXPECT_EQ(G.order(), n) << G.to_string();
    EXPECT_EQ(brute_closure(G.degree(), G.generators()).size(), n);
    EXPECT_EQ(G.elements().size(), n);
  }
}

TEST(PermGroup, Contains) {
  auto G = A4();
  EXPECT_TRUE(G.contains(cyc(4, "(1,3)(2,4)")));
  EXPECT_FALSE(G.contains(cyc(4, "(1,2)")));
}

TEST(PermGroup, ConjugacyClassesMatchBruteForce) {
  for (auto const& [name, G] : solvable_zoo()) {
    auto cc = conjugacy_classes(G);
    std::multiset<std::uint64_t> sizes(cc.sizes.begin(), cc.sizes.end());
    EXPECT_EQ(sizes, brute_class_sizes(G)) << name;
    EXPECT_TRUE(cc.representatives[0].is_identity());
  }
  auto cc = conjugacy_classes(S4());
  EXPECT_EQ(cc.count(), 5u);
  EXPECT_EQ(brute_class_sizes(A5()), (std::multiset<std::uint64_t>{1, 12, 12, 15, 20}));
}

TEST(PermGroup, SylowSubgroups) {
  EXPECT_EQ(sylow_subgroup(S4(), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(S4(), 3).order(), 3u);
  EXPECT_EQ(sylow_subgroup(A5(), 2).order(), 4u);
  EXPECT_EQ(sylow_subgroup(PSL28(), 3).order(), 9u);
  EXPECT_EQ(sylow_subgroup(ASL23(), 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(S4(), 5).order(), 1u);
  auto P = sylow_subgroup(S4(), 2);
  EXPECT_EQ(normalizer(S4(), P).order(), 8u);
  EXPECT_EQ(normalizer(A5(), sylow_subgroup(A5(), 2)).order(), 12u);
  EXPECT_EQ(normalizer(PSL28(), sylow_subgroup(PSL28(), 3)).order(), 18u);
}

TEST(PermGroup, Radicals) {
  EXPECT_EQ(core_p(S4(), 2).order(), 4u);
  EXPECT_EQ(core_pprime(S4(), 2).order(), 1u);
  EXPECT_EQ(core_p(S4(), 3).order(), 1u);
  EXPECT_EQ(core_pprime(C7C3(), 3).order(), 7u);
  EXPECT_EQ(core_p(SL23(), 2).order(), 8u);
  EXPECT_EQ(core_pprime(SL23(), 3).order(), 8u);
  EXPECT_EQ(core_pprime(SL23(), 2).order(), 1u);
  EXPECT_EQ(derived_subgroup(S4()).order(), 12u);
  EXPECT_EQ(derived_subgroup(A4()).order(), 4u);
  EXPECT_EQ(p_residual(S4(), 2).order(), 24u);
  EXPECT_EQ(p_residual(S4(), 3).order(), 12u);
}

TEST(PermGroup, PSolvability) {
  EXPECT_TRUE(is_p_solvable(S4(), 2));
  EXPECT_TRUE(is_p_solvable(ASL23(), 3));
  EXPECT_FALSE(is_p_solvable(A5(), 2));
  EXPECT_FALSE(is_p_solvable(A5(), 3));
  EXPECT_FALSE(is_p_solvable(PSL28(), 3));
  EXPECT_TRUE(is_p_solvable(A5(), 7));  // 7 does not divide |A5|
}

TEST(PermGroup, HallComplements) {
  for (auto const& [name, G] : solvable_zoo()) {
    for (auto p : detail::prime_divisors(G.order())) {
      auto H = hall_p_complement(G, p);
      EXPECT_EQ(H.order(), G.order() / detail::p_part(G.order(), p)) << name << " p=" << p;
      EXPECT_TRUE(is_subgroup(H, G));
    }
  }
  try {
    hall_p_complement(A5(), 2);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPSolvable);
  }
}

// O_{p'} computed from the Hall core agrees with the product of all normal
// p'-subgroups found by normal closures of p'-elements.
TEST(PermGroup, PPrimeCoreAgreesWithNormalClosures) {
  for (auto const& [name, G] : solvable_zoo()) {
    for (auto p : detail::prime_divisors(G.order())) {
      auto K = core_pprime(G, p);
      PermGroup best = PermGroup::trivial(G.degree());
      for (auto const& x : G.elements()) {
        auto ncl = normal_closure(G, {x});
        if (detail::p_part(ncl.order(), p) == 1) best = join(best, ncl);
      }
      EXPECT_EQ(K, best) << name << " p=" << p;
    }
  }
}

TEST(PermGroup, Quotients) {
  auto G = S4();
  auto V = core_p(G, 2);
  Epimorphism pi(G, V);
  EXPECT_EQ(pi.image_group().order(), 6u);
  for (auto const& g : G.elements()) {
    for (auto const& h : G.elements()) {
      EXPECT_EQ(pi.image(g * h), pi.image(g) * pi.image(h));
    }
    EXPECT_EQ(pi.image(pi.preimage(pi.image(g))), pi.image(g));
  }
  EXPECT_THROW(Epimorphism(G, sylow_subgroup(G, 2)), Error);
}

TEST(PermGroup, OrbitsOnAbelianization) {
  // A4 acting on its Sylow 2-subgroup V4: orbits {1}, {the three involutions}
  auto P = sylow_subgroup(A4(), 2);
  EXPECT_EQ(conjugation_orbits_on_quotient(A4(), P, derived_subgroup(P)), 2u);
  auto D = sylow_subgroup(S4(), 2);
  EXPECT_EQ(conjugation_orbits_on_quotient(D, D, derived_subgroup(D)), 4u);
}

TEST(PermGroup, AffineGroupStructure) {
  auto G = ASL23();
  EXPECT_EQ(G.order(), 216u);
  EXPECT_EQ(conjugacy_classes(G).count(), brute_class_sizes(G).size());
  auto d1 = derived_subgroup(G);
  auto d2 = derived_subgroup(d1);
  auto d3 = derived_subgroup(d2);
  EXPECT_EQ(d1.order(), 72u);
  EXPECT_EQ(d2.order(), 18u);
  EXPECT_EQ(d3.order(), 9u);
  EXPECT_TRUE(derived_subgroup(d3).is_trivial());
}
