#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <unistd.h>

#include "mckay/corpus.hpp"

using namespace mckay;
namespace fs = std::filesystem;

namespace {

fs::path corpus_dir() { return fs::path(MCKAY_CORPUS_DIR); }

std::string slurp(fs::path const& p) { return detail::read_file(p); }

// The canonical text of a bundled file: comments and blank lines dropped.
std::string canonical(std::string const& text) {
  std::istringstream is(text);
  std::string line, out;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    line = detail::trim(line.substr(0, hash == std::string::npos ? line.size() : hash));
    if (!line.empty()) out += line + "\n";
  }
  return out;
}

ErrorKind kind_of(std::function<void()> const& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::AssertionFailure;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mckay_corpus_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  void write(std::string const& name, std::string const& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST(GroupFile, ParsesTheBasicExample) {
  auto spec = parse_group_file("name = S4\ndegree = 4\ngen = (1,2)\ngen = (1,2,3,4)\nprime = 2\n");
  EXPECT_EQ(spec.name, "S4");
  EXPECT_EQ(spec.degree, 4u);
  ASSERT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(spec.primes, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(spec.group().order(), 24u);
}

TEST(GroupFile, ProductsOfCyclesAndOrderInsensitiveKeys) {
  auto spec = parse_group_file("gen = (1,2)(3,4)\n# comment\n\nprime = 3\ndegree = 4\nname = V\nprime = 2\n");
  ASSERT_EQ(spec.generators.size(), 1u);
  EXPECT_EQ(spec.generators[0].to_string(), "(1,2)(3,4)");
  EXPECT_EQ(spec.primes, (std::vector<std::uint64_t>{3, 2}));
  // non-disjoint cycles compose left to right
  auto s = parse_group_file("name = x\ndegree = 3\ngen = (1,2) (2,3)\n");
  EXPECT_EQ(s.generators[0].to_string(), "(1,3,2)");
}

TEST(GroupFile, Errors) {
  EXPECT_EQ(kind_of([] { parse_group_file("name = x\ndegree = 4\ngen = (1,5)\n"); }), ErrorKind::CycleOutOfRange);
  EXPECT_EQ(kind_of([] { parse_group_file("name = x\ndegree = 4\ngen = (1,2\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([] { parse_group_file("name = x\ndegree = 4\nprime = 4\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([] { parse_group_file("name = x\ndegree = four\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([] { parse_group_file("name = x\ncolour = red\ndegree = 2\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([] { parse_group_file("degree = 2\n"); }), ErrorKind::BadFormat);
  try {
    parse_group_file("name = x\ndegree = 4\n\ngen = (1,2)(3;4)\n");
    FAIL();
  } catch (Error const& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(GroupFile, BundledFilesRoundTrip) {
  std::size_t n = 0;
  for (auto const& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".grp") continue;
    auto text = slurp(e.path());
    auto spec = parse_group_file(text);
    EXPECT_EQ(render_group_spec(spec), canonical(text)) << e.path();
    EXPECT_EQ(render_group_spec(parse_group_file(render_group_spec(spec))), render_group_spec(spec));
    ++n;
  }
  EXPECT_EQ(n, 17u);
}

TEST(GroupFile, BundledPrimesAreEveryPrimeDivisor) {
  for (auto const& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".grp") continue;
    auto spec = parse_group_file(slurp(e.path()));
    EXPECT_EQ(spec.primes, detail::prime_divisors(spec.group().order())) << spec.name;
  }
}

TEST(DecompositionFile, ParsesTheA5Fixture) {
  auto rec = parse_decomposition_file(slurp(corpus_dir() / "a5_p2.dec"));
  EXPECT_EQ(rec.group, "A5");
  EXPECT_EQ(rec.prime, 2u);
  EXPECT_EQ(rec.rows.size(), 5u);
  EXPECT_EQ(rec.rows[4], (std::vector<std::uint64_t>{1, 1, 1, 0}));
  EXPECT_TRUE(rec.expectations.at("ge-exists"));
}

TEST(DecompositionFile, Errors) {
  std::string const head = "group = A5\nprime = 2\nordinary = 1 3 3 4 5\nbrauer = 1 2 2 4\n";
  std::string const rows = "row = 1 0 0 0\nrow = 1 1 0 0\nrow = 1 0 1 0\nrow = 0 0 0 1\n";
  EXPECT_EQ(kind_of([&] { parse_decomposition_file(head + rows); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([&] { parse_decomposition_file(head + rows + "row = 1 1 1\n"); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([&] { parse_decomposition_file(head + rows + "row = 1 1 -1 1\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([&] { parse_decomposition_file(head + rows + "row = 1 1 x 0\n"); }), ErrorKind::BadFormat);
  EXPECT_EQ(kind_of([&] { parse_decomposition_file(head + rows + "row = 1 1 1 0\nexpect.sometimes = 1\n"); }),
            ErrorKind::BadFormat);
  EXPECT_NO_THROW(parse_decomposition_file(head + rows + "row = 1 1 1 0\n"));
}

TEST(DecompositionFile, BundledFilesRoundTrip) {
  for (auto const& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".dec") continue;
    auto text = slurp(e.path());
    EXPECT_EQ(render_decomposition(parse_decomposition_file(text)), canonical(text)) << e.path();
  }
}

TEST(Runner, EmptyDirectoryIsAnEmptySuccess) {
  TempDir d;
  auto r = run_corpus(d.path);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_TRUE(r.fixtures.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_TRUE(r.all_passed());
}

TEST(Runner, OneMalformedFileDoesNotStopTheBatch) {
  TempDir d;
  d.write("s3.grp", slurp(corpus_dir() / "s3.grp"));
  d.write("a4.grp", slurp(corpus_dir() / "a4.grp"));
  d.write("bad.grp", "name = bad\ndegree = 3\ngen = (1,2,\n");
  auto r = run_corpus(d.path);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].kind, "BadFormat");
  EXPECT_EQ(r.errors[0].file, "bad.grp");
  EXPECT_EQ(r.pairs.size(), 4u);
  for (auto const& p : r.pairs) EXPECT_EQ(p.status, "pass") << p.group << " " << p.prime;
  EXPECT_FALSE(r.all_passed());
}

TEST(Runner, WrongExpectationFails) {
  TempDir d;
  d.write("s3.grp", "name = S3\ndegree = 3\ngen = (1,2)\ngen = (1,2,3)\nprime = 3\nexpect.irr_pprime.3 = 2\n");
  auto r = run_corpus(d.path);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].status, "fail");
  EXPECT_FALSE(r.all_passed());
}

TEST(Runner, DegenerateAndNonSolvableEntries) {
  TempDir d;
  d.write("s3.grp", "name = S3\ndegree = 3\ngen = (1,2)\ngen = (1,2,3)\nprime = 5\n");
  d.write("a5.grp", slurp(corpus_dir() / "a5.grp"));
  auto r = run_corpus(d.path);
  ASSERT_EQ(r.pairs.size(), 4u);
  for (auto const& p : r.pairs) {
    EXPECT_EQ(p.status, "pass") << p.group << " " << p.prime;
    if (p.group == "S3") {
      EXPECT_FALSE(p.divides_order);
      EXPECT_EQ(p.equalities, std::optional<bool>(true));
    } else {
      EXPECT_FALSE(p.p_solvable);
      EXPECT_FALSE(p.equalities.has_value());
    }
  }
}

TEST(Runner, FixtureNeedsItsGroup) {
  TempDir d;
  d.write("a5_p2.dec", slurp(corpus_dir() / "a5_p2.dec"));
  auto r = run_corpus(d.path);
  ASSERT_EQ(r.fixtures.size(), 2u);
  for (auto const& f : r.fixtures) {
    EXPECT_EQ(f.status, "error");
    EXPECT_EQ(f.error_kind, "GroupUnavailable");
  }
}

TEST(Report, MachineFormatRoundTrips) {
  RunOptions opt;
  opt.timing = true;
  auto r = run_corpus(corpus_dir(), opt);
  auto j = report_to_json(r);
  auto back = report_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back, r);
  EXPECT_EQ(report_to_json(back), j);
  EXPECT_EQ(j.at("schema"), kReportSchema);
}

TEST(Report, ConcurrencyDoesNotChangeTheBytes) {
  RunOptions one, many;
  one.jobs = 1;
  many.jobs = 8;
  EXPECT_EQ(render_machine(run_corpus(corpus_dir(), one)), render_machine(run_corpus(corpus_dir(), many)));
}

TEST(Report, BundledCorpusPasses) {
  auto r = run_corpus(corpus_dir());
  EXPECT_TRUE(r.all_passed()) << render_text(r);
  EXPECT_EQ(r.pairs.size(), 31u);
  EXPECT_EQ(r.fixtures.size(), 4u);
}
