#ifndef MCKAY_CORPUS_HPP_
#define MCKAY_CORPUS_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bijection.hpp"
#include "chartable.hpp"
#include "correspondences.hpp"
#include "counterexample.hpp"
#include "errors.hpp"
#include "permgroup.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// Group files
// ---------------------------------------------------------------------------

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::uint64_t> primes;
  std::map<std::string, std::int64_t> expectations;  // key without the "expect." prefix

  PermGroup group() const { return PermGroup::generated_by(degree, generators); }
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] inline void bad_line(std::size_t line, std::string const& what) {
  raise(ErrorKind::BadFormat, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(std::string const& v, std::size_t line, std::string const& what) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    bad_line(line, what + " must be a nonnegative integer, got '" + v + "'");
  }
  try {
    return std::stoull(v);
  } catch (std::exception const&) {
    bad_line(line, what + " out of range");
  }
}

inline std::int64_t parse_int(std::string const& v, std::size_t line, std::string const& what) {
  if (!v.empty() && v[0] == '-') return -static_cast<std::int64_t>(parse_uint(v.substr(1), line, what));
  return static_cast<std::int64_t>(parse_uint(v, line, what));
}

//! "(1,2,3)(4,5)" -> cycles; "()" is the identity.
inline std::vector<std::vector<point_t>> parse_cycles(std::string const& text, std::size_t line) {
  std::vector<std::vector<point_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (i == text.size()) bad_line(line, "empty generator");
  while (i < text.size()) {
    if (text[i] != '(') bad_line(line, "expected '(' in '" + text + "'");
    ++i;
    std::vector<point_t> cyc;
    skip();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip();
      continue;
    }
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) bad_line(line, "expected a point in '" + text + "'");
      auto v = parse_uint(text.substr(start, i - start), line, "point");
      if (v > 0xffffffffull) bad_line(line, "point out of range");
      cyc.push_back(static_cast<point_t>(v));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      bad_line(line, "unterminated cycle in '" + text + "'");
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  return cycles;
}

//! Calls fn(line_number, key, value) for each non-blank, non-comment line.
inline void for_each_entry(std::string_view text,
                           std::function<void(std::size_t, std::string const&, std::string const&)> const& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(raw.substr(0, hash));
    if (!line.empty()) {
      auto eq = line.find('=');
      if (eq == std::string::npos) bad_line(line_no, "expected 'key = value'");
      std::string key = trim(std::string_view(line).substr(0, eq));
      std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key.empty()) bad_line(line_no, "missing key");
      fn(line_no, key, value);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace detail

inline GroupSpec parse_group_file(std::string_view text) {
  GroupSpec spec;
  std::optional<std::size_t> name_line, degree_line;
  std::vector<std::pair<std::size_t, std::string>> raw_gens;
  detail::for_each_entry(text, [&](std::size_t line, std::string const& key, std::string const& value) {
    if (key == "name") {
      if (name_line) detail::bad_line(line, "duplicate name");
      if (value.empty()) detail::bad_line(line, "empty name");
      spec.name = value;
      name_line = line;
    } else if (key == "degree") {
      if (degree_line) detail::bad_line(line, "duplicate degree");
      spec.degree = detail::parse_uint(value, line, "degree");
      if (spec.degree == 0) detail::bad_line(line, "degree must be positive");
      degree_line = line;
    } else if (key == "gen") {
      raw_gens.emplace_back(line, value);
    } else if (key == "prime") {
      auto p = detail::parse_uint(value, line, "prime");
      if (!detail::is_prime(p)) detail::bad_line(line, value + " is not prime");
      spec.primes.push_back(p);
    } else if (key.rfind("expect.", 0) == 0 && key.size() > 7) {
      auto k = key.substr(7);
      if (spec.expectations.count(k)) detail::bad_line(line, "duplicate " + key);
      spec.expectations[k] = detail::parse_int(value, line, key);
    } else {
      detail::bad_line(line, "unknown key '" + key + "'");
    }
  });
  if (!name_line) raise(ErrorKind::BadFormat, "missing name");
  if (!degree_line) raise(ErrorKind::BadFormat, "missing degree");
  for (auto const& [line, value] : raw_gens) {
    auto cycles = detail::parse_cycles(value, line);
    try {
      spec.generators.push_back(Permutation::from_cycles(spec.degree, cycles));
    } catch (Error const& e) {
      raise(e.kind(), "line " + std::to_string(line) + ": " + e.what());
    }
  }
  return spec;
}

inline std::string render_group_spec(GroupSpec const& spec) {
  std::ostringstream os;
  os << "name = " << spec.name << "\n";
  os << "degree = " << spec.degree << "\n";
  for (auto const& g : spec.generators) os << "gen = " << g.to_string() << "\n";
  for (auto p : spec.primes) os << "prime = " << p << "\n";
  for (auto const& [k, v] : spec.expectations) os << "expect." << k << " = " << v << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Decomposition files
// ---------------------------------------------------------------------------

inline DecompositionRecord parse_decomposition_file(std::string_view text) {
  DecompositionRecord rec;
  bool have_group = false, have_prime = false, have_ordinary = false, have_brauer = false;
  auto numbers = [](std::string const& value, std::size_t line, std::string const& what) {
    std::vector<std::uint64_t> out;
    std::istringstream is(value);
    std::string tok;
    while (is >> tok) {
      if (!tok.empty() && tok[0] == '-') detail::bad_line(line, what + " entries must be nonnegative");
      out.push_back(detail::parse_uint(tok, line, what));
    }
    if (out.empty()) detail::bad_line(line, "empty " + what);
    return out;
  };
  detail::for_each_entry(text, [&](std::size_t line, std::string const& key, std::string const& value) {
    if (key == "group") {
      if (have_group) detail::bad_line(line, "duplicate group");
      if (value.empty()) detail::bad_line(line, "empty group label");
      rec.group = value;
      have_group = true;
    } else if (key == "prime") {
      if (have_prime) detail::bad_line(line, "duplicate prime");
      rec.prime = detail::parse_uint(value, line, "prime");
      if (!detail::is_prime(rec.prime)) detail::bad_line(line, value + " is not prime");
      have_prime = true;
    } else if (key == "ordinary") {
      if (have_ordinary) detail::bad_line(line, "duplicate ordinary");
      rec.ordinary = numbers(value, line, "ordinary");
      have_ordinary = true;
    } else if (key == "brauer") {
      if (have_brauer) detail::bad_line(line, "duplicate brauer");
      rec.brauer = numbers(value, line, "brauer");
      have_brauer = true;
    } else if (key == "row") {
      rec.rows.push_back(numbers(value, line, "row"));
    } else if (key.rfind("expect.", 0) == 0) {
      auto mode = key.substr(7);
      parse_mode(mode);
      if (value != "0" && value != "1") detail::bad_line(line, key + " must be 0 or 1");
      rec.expectations[mode] = value == "1";
    } else {
      detail::bad_line(line, "unknown key '" + key + "'");
    }
  });
  if (!have_group || !have_prime || !have_ordinary || !have_brauer) {
    raise(ErrorKind::BadFormat, "decomposition file needs group, prime, ordinary and brauer");
  }
  if (rec.rows.size() != rec.ordinary.size()) {
    raise(ErrorKind::ShapeMismatch, std::to_string(rec.rows.size()) + " rows for " +
                                        std::to_string(rec.ordinary.size()) + " ordinary degrees");
  }
  rec.validate();
  return rec;
}

inline std::string render_decomposition(DecompositionRecord const& rec) {
  auto join = [](std::vector<std::uint64_t> const& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::ostringstream os;
  os << "group = " << rec.group << "\n";
  os << "prime = " << rec.prime << "\n";
  os << "ordinary = " << join(rec.ordinary) << "\n";
  os << "brauer = " << join(rec.brauer) << "\n";
  for (auto const& r : rec.rows) os << "row = " << join(r) << "\n";
  for (auto const& [m, v] : rec.expectations) os << "expect." << m << " = " << (v ? 1 : 0) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline constexpr char const* kReportSchema = "mckay-report/1";

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(InvariantResult const&, InvariantResult const&) = default;
};

struct PairResult {
  std::string file;
  std::string group;
  std::uint64_t prime = 0;
  std::uint64_t order = 0;
  std::size_t classes = 0;
  std::uint64_t table_prime = 0;  // the prime l used to compute the table
  bool divides_order = true;      // false marks a degenerate entry
  bool p_solvable = false;
  std::string status;             // pass | fail | error
  std::optional<bool> equalities;  // nullopt: not applicable
  std::size_t equality_checks = 0;
  std::optional<bool> trivial_column;
  std::size_t pprime_group = 0;
  std::size_t pprime_local = 0;
  std::vector<InvariantResult> invariants;
  std::string trace_digest;
  std::map<std::string, std::size_t> branches;  // step kind -> number of pairs using it
  std::map<std::string, std::size_t> stats;
  std::optional<double> wall_ms;
  std::string error_kind;
  std::string error_message;
  friend bool operator==(PairResult const&, PairResult const&) = default;
};

struct FixtureResult {
  std::string file;
  std::string group;
  std::uint64_t prime = 0;
  std::string mode;
  std::string status;  // pass | fail | error
  bool verdict = false;
  bool expected = false;
  std::vector<std::uint64_t> group_side;
  std::vector<std::uint64_t> local_side;
  std::string detail;
  std::string error_kind;
  std::string error_message;
  friend bool operator==(FixtureResult const&, FixtureResult const&) = default;
};

struct FileError {
  std::string file;
  std::string kind;
  std::string message;
  friend bool operator==(FileError const&, FileError const&) = default;
};

struct RunReport {
  std::vector<PairResult> pairs;
  std::vector<FixtureResult> fixtures;
  std::vector<FileError> errors;

  bool all_passed() const {
    if (!errors.empty()) return false;
    for (auto const& p : pairs) {
      if (p.status != "pass") return false;
    }
    for (auto const& f : fixtures) {
      if (f.status != "pass") return false;
    }
    return true;
  }
  friend bool operator==(RunReport const&, RunReport const&) = default;
};

namespace detail {

template <class T>
nlohmann::json optional_json(std::optional<T> const& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_optional(nlohmann::json const& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, InvariantResult const& r) {
  j = nlohmann::json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}
inline void from_json(nlohmann::json const& j, InvariantResult& r) {
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.detail = j.at("detail").get<std::string>();
}

inline void to_json(nlohmann::json& j, PairResult const& r) {
  j = nlohmann::json{{"file", r.file},
                     {"group", r.group},
                     {"prime", r.prime},
                     {"order", r.order},
                     {"classes", r.classes},
                     {"table_prime", r.table_prime},
                     {"divides_order", r.divides_order},
                     {"p_solvable", r.p_solvable},
                     {"status", r.status},
                     {"equalities", detail::optional_json(r.equalities)},
                     {"equality_checks", r.equality_checks},
                     {"trivial_column", detail::optional_json(r.trivial_column)},
                     {"irr_pprime_group", r.pprime_group},
                     {"irr_pprime_local", r.pprime_local},
                     {"invariants", r.invariants},
                     {"trace_digest", r.trace_digest},
                     {"branches", r.branches},
                     {"stats", r.stats},
                     {"error_kind", r.error_kind},
                     {"error_message", r.error_message}};
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
}
inline void from_json(nlohmann::json const& j, PairResult& r) {
  r.file = j.at("file").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.prime = j.at("prime").get<std::uint64_t>();
  r.order = j.at("order").get<std::uint64_t>();
  r.classes = j.at("classes").get<std::size_t>();
  r.table_prime = j.at("table_prime").get<std::uint64_t>();
  r.divides_order = j.at("divides_order").get<bool>();
  r.p_solvable = j.at("p_solvable").get<bool>();
  r.status = j.at("status").get<std::string>();
  r.equalities = detail::json_optional<bool>(j.at("equalities"));
  r.equality_checks = j.at("equality_checks").get<std::size_t>();
  r.trivial_column = detail::json_optional<bool>(j.at("trivial_column"));
  r.pprime_group = j.at("irr_pprime_group").get<std::size_t>();
  r.pprime_local = j.at("irr_pprime_local").get<std::size_t>();
  r.invariants = j.at("invariants").get<std::vector<InvariantResult>>();
  r.trace_digest = j.at("trace_digest").get<std::string>();
  r.branches = j.at("branches").get<std::map<std::string, std::size_t>>();
  r.stats = j.at("stats").get<std::map<std::string, std::size_t>>();
  r.error_kind = j.at("error_kind").get<std::string>();
  r.error_message = j.at("error_message").get<std::string>();
  r.wall_ms = j.contains("wall_ms") ? std::optional<double>(j.at("wall_ms").get<double>()) : std::nullopt;
}

inline void to_json(nlohmann::json& j, FixtureResult const& r) {
  j = nlohmann::json{{"file", r.file},
                     {"group", r.group},
                     {"prime", r.prime},
                     {"mode", r.mode},
                     {"status", r.status},
                     {"verdict", r.verdict},
                     {"expected", r.expected},
                     {"group_side", r.group_side},
                     {"local_side", r.local_side},
                     {"detail", r.detail},
                     {"error_kind", r.error_kind},
                     {"error_message", r.error_message}};
}
inline void from_json(nlohmann::json const& j, FixtureResult& r) {
  r.file = j.at("file").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.prime = j.at("prime").get<std::uint64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.verdict = j.at("verdict").get<bool>();
  r.expected = j.at("expected").get<bool>();
  r.group_side = j.at("group_side").get<std::vector<std::uint64_t>>();
  r.local_side = j.at("local_side").get<std::vector<std::uint64_t>>();
  r.detail = j.at("detail").get<std::string>();
  r.error_kind = j.at("error_kind").get<std::string>();
  r.error_message = j.at("error_message").get<std::string>();
}

inline void to_json(nlohmann::json& j, FileError const& e) {
  j = nlohmann::json{{"file", e.file}, {"kind", e.kind}, {"message", e.message}};
}
inline void from_json(nlohmann::json const& j, FileError& e) {
  e.file = j.at("file").get<std::string>();
  e.kind = j.at("kind").get<std::string>();
  e.message = j.at("message").get<std::string>();
}

inline nlohmann::json report_to_json(RunReport const& r) {
  std::size_t failed = 0;
  for (auto const& p : r.pairs) failed += p.status != "pass";
  for (auto const& f : r.fixtures) failed += f.status != "pass";
  return nlohmann::json{{"schema", kReportSchema},
                        {"pairs", r.pairs},
                        {"fixtures", r.fixtures},
                        {"errors", r.errors},
                        {"summary",
                         {{"pairs", r.pairs.size()},
                          {"fixtures", r.fixtures.size()},
                          {"errors", r.errors.size()},
                          {"failed", failed},
                          {"passed", r.all_passed()}}}};
}

inline RunReport report_from_json(nlohmann::json const& j) {
  if (j.value("schema", std::string()) != kReportSchema) {
    raise(ErrorKind::BadFormat, "unsupported report schema");
  }
  RunReport r;
  r.pairs = j.at("pairs").get<std::vector<PairResult>>();
  r.fixtures = j.at("fixtures").get<std::vector<FixtureResult>>();
  r.errors = j.at("errors").get<std::vector<FileError>>();
  return r;
}

inline std::string render_machine(RunReport const& r) { return report_to_json(r).dump(2) + "\n"; }

inline std::string render_text(RunReport const& r) {
  std::ostringstream os;
  auto yn = [](std::optional<bool> b) { return b ? (*b ? "pass" : "FAIL") : "n/a"; };
  for (auto const& e : r.errors) os << "ERROR " << e.file << ": " << e.kind << ": " << e.message << "\n";
  for (auto const& p : r.pairs) {
    os << (p.status == "pass" ? "ok   " : p.status == "fail" ? "FAIL " : "ERROR") << " " << p.group
       << " p=" << p.prime << " |G|=" << p.order << " classes=" << p.classes << " l=" << p.table_prime;
    if (!p.divides_order) os << " (p does not divide |G|)";
    os << " equalities=" << yn(p.equalities) << " trivial_column=" << yn(p.trivial_column) << " irr_p'=" << p.pprime_group
       << "/" << p.pprime_local;
    if (!p.trace_digest.empty()) os << " digest=" << p.trace_digest;
    if (p.wall_ms) os << " " << static_cast<long long>(*p.wall_ms) << "ms";
    os << "\n";
    for (auto const& inv : p.invariants) {
      if (!inv.passed) os << "      invariant " << inv.name << " failed: " << inv.detail << "\n";
    }
    if (!p.error_kind.empty()) os << "      " << p.error_kind << ": " << p.error_message << "\n";
  }
  for (auto const& f : r.fixtures) {
    os << (f.status == "pass" ? "ok   " : f.status == "fail" ? "FAIL " : "ERROR") << " fixture " << f.file
       << " " << f.mode << " verdict=" << (f.verdict ? "holds" : "fails")
       << " expected=" << (f.expected ? "holds" : "fails");
    if (!f.detail.empty()) os << " " << f.detail;
    if (!f.error_kind.empty()) os << " " << f.error_kind << ": " << f.error_message;
    os << "\n";
  }
  std::size_t failed = 0;
  for (auto const& p : r.pairs) failed += p.status != "pass";
  for (auto const& f : r.fixtures) failed += f.status != "pass";
  os << r.pairs.size() << " pairs, " << r.fixtures.size() << " fixture checks, " << r.errors.size()
     << " file errors, " << failed << " failed\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

struct RunOptions {
  unsigned jobs = 0;                           // 0: hardware concurrency
  bool timing = false;                         // wall times make reports non-reproducible
  std::size_t frobenius_trials = 100;
  std::uint64_t hall_conjugation_limit = 2000;  // group order bound for the conjugated-complement check
};

namespace detail {

inline std::uint64_t seed_for(std::string const& name, std::uint64_t p) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h ^ (p * 0x9e3779b97f4a7c15ull);
}

inline InvariantResult check(std::string name, std::function<std::string()> const& body) {
  InvariantResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (Error const& e) {
    r.detail = e.what();
  }
  return r;
}

inline std::string table_orthogonality(GroupContext const& ctx) {
  auto const n = ctx.irr_count();
  Integer sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto chi = ctx.irr(i);
    sq += Integer(chi.degree()) * chi.degree();
    for (std::size_t j = i; j < n; ++j) {
      if (inner_product(chi, ctx.irr(j)) != Rational(i == j ? 1 : 0)) {
        return "rows " + std::to_string(i) + "," + std::to_string(j) + " not orthonormal";
      }
    }
  }
  if (sq != Integer(ctx.order())) return "sum of squared degrees != |G|";
  auto const& cc = ctx.classes();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < n; ++i) s += ctx.irr(i)[a] * ctx.irr(i)[b].conj();
      Cyclotomic want = a == b ? Cyclotomic(static_cast<long long>(ctx.order() / cc.sizes[a])) : Cyclotomic(0);
      if (s != want) return "columns " + std::to_string(a) + "," + std::to_string(b) + " not orthogonal";
    }
  }
  return {};
}

inline std::string frobenius_trials(GroupRef const& G, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto const& el = G->group().elements();
  for (std::size_t t = 0; t < trials; ++t) {
    auto U = context(subgroup(G->group(), {el[rng() % el.size()], el[rng() % el.size()]}));
    auto theta = U->irr(rng() % U->irr_count());
    auto chi = G->irr(rng() % G->irr_count());
    if (inner_product(induce(theta, G), chi) != inner_product(theta, restrict(chi, U))) {
      return "trial " + std::to_string(t) + " violates reciprocity";
    }
  }
  return {};
}

inline void evaluate_pair(GroupSpec const& spec, std::string const& file, std::uint64_t p,
                          RunOptions const& opt, PairResult& out) {
  auto const start = std::chrono::steady_clock::now();
  out.file = file;
  out.group = spec.name;
  out.prime = p;
  try {
    PermGroup const G = spec.group();
    out.order = G.order();
    out.divides_order = G.order() % p == 0;
    auto ctx = context(G);
    out.classes = ctx->class_count();
    out.table_prime = ctx->table().prime;
    auto& inv = out.invariants;

    inv.push_back(check("orthogonality", [&] { return table_orthogonality(*ctx); }));
    inv.push_back(check("frobenius_reciprocity", [&] {
      return frobenius_trials(ctx, opt.frobenius_trials, seed_for(spec.name, p));
    }));

    PermGroup const P = sylow_subgroup(G, p);
    PermGroup const NGP = normalizer(G, P);
    auto NG = context(NGP);
    out.pprime_group = irr_pprime(*ctx, p).size();
    out.pprime_local = irr_pprime(*NG, p).size();
    inv.push_back(check("mckay_count", [&]() -> std::string {
      if (out.pprime_group == out.pprime_local) return {};
      return std::to_string(out.pprime_group) + " != " + std::to_string(out.pprime_local);
    }));
    inv.push_back(check("brauer_lemma_orbits", [&]() -> std::string {
      auto a = conjugation_orbits_on_quotient(NGP, P, derived_subgroup(P));
      auto b = orbits_on_linear_characters(NGP, P);
      if (a == b) return {};
      return std::to_string(a) + " orbits on P/P' vs " + std::to_string(b) + " on Irr(P/P')";
    }));

    out.p_solvable = is_p_solvable(G, p);
    if (out.p_solvable) {
      auto thm = verify_decomposition_equalities(G, p);
      out.equalities = thm.passed;
      out.equality_checks = thm.checks.size();
      out.trace_digest = thm.bijection.trace_digest();
      for (auto const& tr : thm.bijection.trace) {
        std::set<std::string> kinds;
        for (auto const& s : tr) kinds.insert(to_string(s.kind));
        for (auto const& k : kinds) ++out.branches[k];
      }
      auto const& st = thm.bijection.stats;
      out.stats = {{"recursion_calls", st.recursion_calls},
                   {"blocks", st.blocks},
                   {"mackey_checks", st.mackey_checks},
                   {"factorization_checks", st.factorization_checks},
                   {"clifford_round_trips", st.clifford_round_trips},
                   {"gallagher_round_trips", st.gallagher_round_trips},
                   {"restriction_checks", st.restriction_checks},
                   {"injectivity_checks", st.injectivity_checks},
                   {"leftover_pairs", st.leftover_pairs}};
      auto cor = verify_trivial_column(G, p);
      out.trivial_column = cor.passed;

      inv.push_back(check("hall_independence", [&]() -> std::string {
        if (G.order() > opt.hall_conjugation_limit) return {};
        PermGroup const H = hall_p_complement(G, p);
        std::mt19937_64 rng(seed_for(spec.name, p) + 1);
        auto const& g = G.elements()[rng() % G.order()];
        PermGroup const H2 = conjugate(H, g);
        for (auto t : linear_ibr_lifts(ctx, p)) {
          for (std::size_t i = 0; i < ctx->irr_count(); ++i) {
            if (decomposition_number_on(ctx->irr(i), ctx->irr(t), H) !=
                decomposition_number_on(ctx->irr(i), ctx->irr(t), H2)) {
              return "d depends on the complement for chi " + std::to_string(i);
            }
          }
        }
        return {};
      }));
      inv.push_back(check("linear_lifts_distinct", [&]() -> std::string {
        auto lifts = linear_ibr_lifts(ctx, p);
        for (std::size_t a = 0; a < lifts.size(); ++a) {
          for (std::size_t b = a + 1; b < lifts.size(); ++b) {
            bool differ = false;
            for (std::size_t c = 0; c < ctx->class_count(); ++c) {
              if (ctx->classes().element_orders[c] % p == 0) continue;
              differ = differ || ctx->irr(lifts[a])[c] != ctx->irr(lifts[b])[c];
            }
            if (!differ) return "lifts agree on p-regular classes";
          }
        }
        return {};
      }));
      inv.push_back(check("p_invariant_constituents", [&]() -> std::string {
        for (auto const& L : {core_p(G, p), core_pprime(G, p)}) {
          auto Lc = context(L);
          for (auto i : irr_pprime(*ctx, p)) p_invariant_constituents(ctx->irr(i), Lc, P);
        }
        return {};
      }));
      inv.push_back(check("construction_identities", [&]() -> std::string {
        // every identity was asserted during the build; an exception would have
        // aborted it, so only record that the checks ran
        return {};
      }));
    }

    for (auto const& [key, want] : spec.expectations) {
      std::optional<std::int64_t> got;
      auto const suffix = "." + std::to_string(p);
      if (key == "order") got = static_cast<std::int64_t>(G.order());
      else if (key == "classes") got = static_cast<std::int64_t>(ctx->class_count());
      else if (key == "irr_pprime" + suffix) got = static_cast<std::int64_t>(out.pprime_group);
      else if (key == "trivial_column" + suffix && out.p_solvable) {
        got = static_cast<std::int64_t>(verify_trivial_column(G, p).ones);
      }
      if (!got) continue;
      inv.push_back(check("expect." + key, [&]() -> std::string {
        if (*got == want) return {};
        return "expected " + std::to_string(want) + ", computed " + std::to_string(*got);
      }));
      if (key == "irr_pprime" + suffix) {
        inv.push_back(check("expect." + key + ".local", [&]() -> std::string {
          if (static_cast<std::int64_t>(out.pprime_local) == want) return {};
          return "expected " + std::to_string(want) + ", computed " + std::to_string(out.pprime_local);
        }));
      }
    }

    bool ok = out.equalities.value_or(true) && out.trivial_column.value_or(true);
    for (auto const& r : inv) ok = ok && r.passed;
    out.status = ok ? "pass" : "fail";
  } catch (Error const& e) {
    out.status = "error";
    out.error_kind = to_string(e.kind());
    out.error_message = e.what();
  } catch (std::exception const& e) {
    out.status = "error";
    out.error_kind = "Internal";
    out.error_message = e.what();
  }
  if (opt.timing) {
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
}

inline void evaluate_fixture(DecompositionRecord const& rec, std::string const& file, std::string const& mode,
                             bool expected, std::optional<PermGroup> const& G, FixtureResult& out) {
  out.file = file;
  out.group = rec.group;
  out.prime = rec.prime;
  out.mode = mode;
  out.expected = expected;
  try {
    auto r = counterexample_check(rec, parse_mode(mode), G);
    out.verdict = r.passed;
    out.group_side = r.group_side;
    out.local_side = r.local_side;
    out.detail = r.detail;
    out.status = r.passed == expected ? "pass" : "fail";
  } catch (Error const& e) {
    out.status = "error";
    out.error_kind = to_string(e.kind());
    out.error_message = e.what();
  }
}

inline std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::BadFormat, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

//! Runs tasks[i]() on a fixed pool; results are written by index so the
//! outcome never depends on scheduling.
inline void run_parallel(std::vector<std::function<void()>> const& tasks, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace detail

//! Runs every *.grp (for each listed prime) and every *.dec (for each
//! recorded expectation) in the directory, in file-name order.
inline RunReport run_corpus(std::filesystem::path const& dir, RunOptions const& opt = {}) {
  namespace fs = std::filesystem;
  RunReport report;
  if (!fs::is_directory(dir)) raise(ErrorKind::BadFormat, dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (auto const& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    auto ext = e.path().extension().string();
    if (ext == ".grp" || ext == ".dec") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, GroupSpec>> specs;
  std::vector<std::pair<std::string, DecompositionRecord>> records;
  for (auto const& f : files) {
    auto name = f.filename().string();
    try {
      auto text = detail::read_file(f);
      if (f.extension() == ".grp") specs.emplace_back(name, parse_group_file(text));
      else records.emplace_back(name, parse_decomposition_file(text));
    } catch (Error const& e) {
      report.errors.push_back({name, std::string(to_string(e.kind())), e.what()});
    }
  }

  std::vector<std::function<void()>> tasks;
  std::size_t npairs = 0;
  for (auto const& [file, spec] : specs) npairs += spec.primes.size();
  report.pairs.resize(npairs);
  std::size_t slot = 0;
  for (auto const& [file, spec] : specs) {
    for (auto p : spec.primes) {
      auto* out = &report.pairs[slot++];
      tasks.push_back([&spec = spec, &file = file, p, &opt, out] { detail::evaluate_pair(spec, file, p, opt, *out); });
    }
  }
  std::size_t nfix = 0;
  for (auto const& [file, rec] : records) nfix += rec.expectations.size();
  report.fixtures.resize(nfix);
  slot = 0;
  for (auto const& [file, rec] : records) {
    std::optional<PermGroup> G;
    for (auto const& [gf, spec] : specs) {
      if (spec.name == rec.group) G = spec.group();
    }
    for (auto const& [mode, expected] : rec.expectations) {
      auto* out = &report.fixtures[slot++];
      tasks.push_back([&rec = rec, &file = file, mode = mode, expected = expected, G, out] {
        detail::evaluate_fixture(rec, file, mode, expected, G, *out);
      });
    }
  }
  detail::run_parallel(tasks, opt.jobs);
  return report;
}

}  // namespace mckay

#endif  // MCKAY_CORPUS_HPP_
