// Command-line front end.  Exit status: 0 when every verdict holds, 1 when a
// verdict fails, 2 on input or usage errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mckay/mckay.hpp"

namespace fs = std::filesystem;
using namespace mckay;

namespace {

std::string label(GroupContext const& ctx, std::size_t i) {
  return "X." + std::to_string(i + 1) + "(" + std::to_string(ctx.irr(i).degree()) + ")";
}

GroupSpec load_group(std::string const& path) { return parse_group_file(detail::read_file(path)); }

int cmd_table(std::string const& file, bool dump) {
  auto spec = load_group(file);
  auto ctx = context(spec.group());
  std::cout << spec.name << "\n" << (dump ? dump_table(*ctx) : pretty_table(*ctx));
  return 0;
}

int cmd_bijection(std::string const& file, std::uint64_t p, bool trace) {
  auto spec = load_group(file);
  auto f = build_bijection(spec.group(), p);
  std::cout << spec.name << " p=" << p << " |P|=" << f.sylow.order() << " |N_G(P)|=" << f.normalizer->order()
            << "\n";
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    auto [chi, psi] = f.pairs[i];
    std::cout << label(*f.group, chi) << " -> " << label(*f.normalizer, psi) << "\n";
    if (trace) {
      for (auto const& s : f.trace[i]) std::cout << "    " << s.to_string() << "\n";
    }
  }
  std::cout << "digest " << f.trace_digest() << "\n";
  return 0;
}

int cmd_verify(std::string const& file, std::uint64_t p) {
  auto spec = load_group(file);
  PermGroup const G = spec.group();
  if (!is_p_solvable(G, p)) {
    auto ctx = context(G);
    auto N = context(normalizer(G, sylow_subgroup(G, p)));
    auto a = irr_pprime(*ctx, p).size(), b = irr_pprime(*N, p).size();
    std::cout << spec.name << " is not " << p << "-solvable: the decomposition checks do not apply\n"
              << "p'-degree counts " << a << " vs " << b << (a == b ? " (equal)\n" : " (DIFFER)\n");
    return a == b ? 0 : 1;
  }
  auto thm = verify_decomposition_equalities(G, p);
  std::cout << spec.name << " p=" << p << "\n";
  for (auto const& c : thm.checks) {
    auto const& f = thm.bijection;
    std::cout << "  d(" << label(*f.group, c.chi) << ", X." << c.tau + 1 << ") = " << c.d_group << "   d("
              << label(*f.normalizer, c.image) << ", restricted) = " << c.d_local << (c.ok ? "" : "   MISMATCH")
              << "\n";
  }
  std::cout << "decomposition equalities: " << (thm.passed ? "holds" : "FAILS") << " (" << thm.checks.size() << " checks, "
            << thm.pprime_group << " = " << thm.pprime_local << " p'-degree characters)\n";
  auto cor = verify_trivial_column(G, p);
  std::cout << "trivial column: " << (cor.passed ? "holds" : "FAILS") << " (" << cor.ones << " ones, "
            << cor.orbits_on_quotient << " orbits on P/P', " << cor.orbits_on_characters
            << " on its characters)\n";
  return thm.passed && cor.passed ? 0 : 1;
}

int cmd_corpus(std::string const& dir, std::string const& report, std::string const& format, unsigned jobs,
               bool timing) {
  RunOptions opt;
  opt.jobs = jobs;
  opt.timing = timing;
  auto r = run_corpus(dir, opt);
  std::string const text = format == "machine" ? render_machine(r) : render_text(r);
  if (report.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report, std::ios::binary);
    if (!out) raise(ErrorKind::BadFormat, "cannot write " + report);
    out << text;
    std::cout << (r.all_passed() ? "all verdicts hold" : "some verdicts fail") << "; report written to "
              << report << "\n";
  }
  return r.all_passed() ? 0 : 1;
}

// Without --group the directory of the fixture is searched for a group file
// with the recorded label.
std::optional<PermGroup> fixture_group(DecompositionRecord const& rec, std::string const& fixture,
                                       std::string const& group_file) {
  if (!group_file.empty()) return load_group(group_file).group();
  auto dir = fs::path(fixture).parent_path();
  if (dir.empty()) dir = ".";
  std::vector<fs::path> files;
  for (auto const& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".grp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (auto const& f : files) {
    try {
      auto spec = load_group(f.string());
      if (spec.name == rec.group) return spec.group();
    } catch (Error const&) {
    }
  }
  return std::nullopt;
}

int cmd_check_fixture(std::string const& file, std::string const& mode, std::string const& group_file) {
  auto rec = parse_decomposition_file(detail::read_file(file));
  auto m = parse_mode(mode);
  auto G = m == CounterexampleMode::ZeroExists && group_file.empty() ? std::nullopt
                                                                     : fixture_group(rec, file, group_file);
  auto r = counterexample_check(rec, m, G);
  std::cout << rec.group << " p=" << rec.prime << " " << to_string(m) << ": " << (r.passed ? "holds" : "fails")
            << "\n  " << r.detail << "\n";
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, McKay bijections and decomposition-number checks for permutation groups"};
  app.require_subcommand(1);

  std::string file, dir, report, format = "text", mode, group_file;
  std::uint64_t prime = 0;
  bool trace = false, dump = false, timing = false;
  unsigned jobs = 0;

  auto* table = app.add_subcommand("table", "print the character table of a group file");
  table->add_option("file", file, "group file")->required();
  table->add_flag("--dump", dump, "plain machine-oriented dump");

  auto* bij = app.add_subcommand("bijection", "build the McKay bijection");
  bij->add_option("file", file, "group file")->required();
  bij->add_option("--prime,-p", prime, "prime")->required();
  bij->add_flag("--trace", trace, "show the recursion path of each pair");

  auto* ver = app.add_subcommand("verify", "check the decomposition-number equalities");
  ver->add_option("file", file, "group file")->required();
  ver->add_option("--prime,-p", prime, "prime")->required();

  auto* cor = app.add_subcommand("corpus", "run every group and fixture in a directory");
  cor->add_option("dir", dir, "corpus directory")->required();
  cor->add_option("--report", report, "write the report to this path");
  cor->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  cor->add_option("--jobs,-j", jobs, "worker threads (0: all cores)");
  cor->add_flag("--timing", timing, "record wall times (reports are then not reproducible)");

  auto* fix = app.add_subcommand("check-fixture", "evaluate a decomposition-matrix claim");
  fix->add_option("file", file, "decomposition file")->required();
  fix->add_option("--mode", mode, "no-equality, ge-exists or zero-exists")
      ->required()
      ->check(CLI::IsMember({"no-equality", "ge-exists", "zero-exists"}));
  fix->add_option("--group", group_file, "group file for the recorded group");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(file, dump);
    if (*bij) return cmd_bijection(file, prime, trace);
    if (*ver) return cmd_verify(file, prime);
    if (*cor) return cmd_corpus(dir, report, format, jobs, timing);
    if (*fix) return cmd_check_fixture(file, mode, group_file);
  } catch (Error const& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
