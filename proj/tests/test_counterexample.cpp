#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mckay/corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mckay;
using namespace testgroups;
using namespace oracles;

namespace {

DecompositionRecord load(std::string const& name) {
  std::ifstream in(std::string(MCKAY_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_decomposition_file(ss.str());
}

DecompositionRecord a5_record() {
  DecompositionRecord r;
  r.group = "A5";
  r.prime = 2;
  r.ordinary = {1, 3, 3, 4, 5};
  r.brauer = {1, 2, 2, 4};
  r.rows = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 0}};
  return r;
}

}  // namespace

TEST(FixtureOracle, A5AtTwoIsTheUniqueConsistentMatrix) {
  Oracle o(A5(), 2, {1, 2, 2, 4});
  auto sols = o.solutions();
  ASSERT_EQ(sols.size(), 1u);
  auto rec = load("a5_p2.dec");
  EXPECT_TRUE(same_up_to_order(sols[0], o.degrees, rec.rows, rec.ordinary, rec.brauer));
  EXPECT_TRUE(same_up_to_order(a5_record().rows, a5_record().ordinary, rec.rows, rec.ordinary, rec.brauer));
}

TEST(FixtureOracle, PSL28AtThreeIsTheUniqueConsistentMatrix) {
  Oracle o(PSL28(), 3, {1, 7, 9, 9, 9});
  auto sols = o.solutions();
  ASSERT_EQ(sols.size(), 1u);
  auto rec = load("psl28_p3.dec");
  EXPECT_TRUE(same_up_to_order(sols[0], o.degrees, rec.rows, rec.ordinary, rec.brauer));
}

TEST(FixtureOracle, RejectsAWrongBrauerDegreeList) {
  // A5 has no 2-modular Brauer character of degree 3
  Oracle o(A5(), 2, {1, 3, 4});
  EXPECT_TRUE(o.solutions().empty());
}

TEST(Counterexample, A5AtTwo) {
  auto rec = load("a5_p2.dec");
  auto ne = counterexample_check(rec, CounterexampleMode::NoEquality, A5());
  EXPECT_TRUE(ne.passed);
  EXPECT_EQ(ne.group_side, (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(ne.local_side, (std::vector<std::uint64_t>{1, 1, 0, 0}));
  EXPECT_TRUE(counterexample_check(rec, CounterexampleMode::GeExists, A5()).passed);
  EXPECT_FALSE(counterexample_check(rec, CounterexampleMode::ZeroExists, A5()).passed);
}

TEST(Counterexample, PSL28AtThree) {
  auto rec = load("psl28_p3.dec");
  auto ne = counterexample_check(rec, CounterexampleMode::NoEquality, PSL28());
  EXPECT_TRUE(ne.passed);
  EXPECT_EQ(ne.group_side, (std::vector<std::uint64_t>{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(ne.local_side, (std::vector<std::uint64_t>{1, 1, 1, 1, 1, 0}));
  // the 7s have d = 0 while five of the six local characters have d = 1
  EXPECT_FALSE(counterexample_check(rec, CounterexampleMode::GeExists, PSL28()).passed);
  EXPECT_TRUE(counterexample_check(rec, CounterexampleMode::ZeroExists, PSL28()).passed);
}

TEST(Counterexample, ZeroColumnFailsGeExists) {
  DecompositionRecord r;
  r.group = "S3";
  r.prime = 3;
  r.ordinary = {1, 1, 2};
  r.brauer = {1, 1};
  // shape-valid but with an all-zero first column
  r.rows = {{0, 1}, {0, 1}, {0, 2}};
  auto bad = counterexample_check(r, CounterexampleMode::GeExists, S3());
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.group_side, (std::vector<std::uint64_t>{0, 0, 0}));
  r.rows = {{1, 0}, {0, 1}, {1, 1}};
  auto ok = counterexample_check(r, CounterexampleMode::GeExists, S3());
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.group_side, (std::vector<std::uint64_t>{1, 1, 0}));
  EXPECT_EQ(ok.local_side, (std::vector<std::uint64_t>{1, 1, 0}));
  EXPECT_FALSE(counterexample_check(r, CounterexampleMode::NoEquality, S3()).passed);
}

TEST(Counterexample, ZeroExistsNeedsAZero) {
  auto r = a5_record();
  auto rep = counterexample_check(r, CounterexampleMode::ZeroExists, std::nullopt);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.group_side, (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(Counterexample, MatchingIsExact) {
  EXPECT_TRUE(dominating_matching_exists({1, 0, 1}, {0, 1, 1}));
  EXPECT_FALSE(dominating_matching_exists({1, 0, 0}, {1, 1, 0}));
  EXPECT_FALSE(dominating_matching_exists({1, 1}, {1}));
  EXPECT_TRUE(dominating_matching_exists({2, 0}, {1, 0}));
}

TEST(Counterexample, Errors) {
  auto r = a5_record();
  r.rows.pop_back();
  try {
    r.validate();
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
  r = a5_record();
  r.rows[1] = {1, 1, 1, 0};
  try {
    r.validate();
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadRecord);
  }
  r = a5_record();
  try {
    counterexample_check(r, CounterexampleMode::NoEquality, std::nullopt);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupUnavailable);
  }
  try {
    counterexample_check(r, CounterexampleMode::NoEquality, S4());
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentDegrees);
  }
  try {
    parse_mode("sometimes");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadFormat);
  }
}
