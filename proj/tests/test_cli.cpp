#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(std::string const& args) {
  std::string cmd = std::string(MCKAY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string corpus(std::string const& f) { return std::string(MCKAY_CORPUS_DIR) + "/" + f; }

bool has(std::string const& s, std::string const& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Table) {
  auto r = run("table " + corpus("s4.grp"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r.out, "X.1")) << r.out;
  auto d = run("table --dump " + corpus("c3.grp"));
  EXPECT_EQ(d.status, 0);
  EXPECT_TRUE(has(d.out, "classes 3")) << d.out;
}

TEST(Cli, Bijection) {
  auto r = run("bijection " + corpus("s4.grp") + " --prime 2 --trace");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r.out, "->"));
  EXPECT_TRUE(has(r.out, "O_p"));
  EXPECT_TRUE(has(r.out, "digest "));
  EXPECT_EQ(run("bijection " + corpus("a5.grp") + " --prime 2").status, 2);
}

TEST(Cli, Verify) {
  auto r = run("verify " + corpus("a4.grp") + " --prime 2");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r.out, "decomposition equalities: holds"));
  EXPECT_TRUE(has(r.out, "trivial column: holds"));
  auto n = run("verify " + corpus("a5.grp") + " --prime 2");
  EXPECT_EQ(n.status, 0) << n.out;
  EXPECT_TRUE(has(n.out, "do not apply"));
}

TEST(Cli, CheckFixture) {
  auto ok = run("check-fixture " + corpus("a5_p2.dec") + " --mode ge-exists");
  EXPECT_EQ(ok.status, 0) << ok.out;
  auto no = run("check-fixture " + corpus("psl28_p3.dec") + " --mode ge-exists --group " + corpus("psl28.grp"));
  EXPECT_EQ(no.status, 1) << no.out;
  EXPECT_TRUE(has(no.out, "fails"));
  EXPECT_EQ(run("check-fixture " + corpus("a5_p2.dec") + " --mode zero-exists").status, 1);
  EXPECT_EQ(run("check-fixture " + corpus("a5_p2.dec") + " --mode sometimes").status, 2);
}

TEST(Cli, CorpusFormats) {
  auto t = run("corpus " + std::string(MCKAY_CORPUS_DIR));
  EXPECT_EQ(t.status, 0) << t.out;
  EXPECT_TRUE(has(t.out, "0 failed"));
  auto m = run("corpus " + std::string(MCKAY_CORPUS_DIR) + " --format machine");
  EXPECT_EQ(m.status, 0);
  EXPECT_TRUE(has(m.out, "\"schema\": \"mckay-report/1\""));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("table /nonexistent/file.grp").status, 2);
  EXPECT_EQ(run("corpus /nonexistent").status, 2);
}
