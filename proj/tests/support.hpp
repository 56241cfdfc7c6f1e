#ifndef MCKAY_TESTS_SUPPORT_HPP_
#define MCKAY_TESTS_SUPPORT_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include <mckay/chartable.hpp>
#include <mckay/permgroup.hpp>

namespace testgroups {

using mckay::PermGroup;
using mckay::Permutation;

// Parses "(1,2)(3,4)" style products of 1-based cycles.
inline Permutation cyc(std::size_t degree, std::string const& text) {
  std::vector<std::vector<mckay::point_t>> cycles;
  std::vector<mckay::point_t> cur;
  std::string num;
  for (char c : text) {
    if (c == '(') {
      cur.clear();
    } else if (c == ',' || c == ')') {
      if (!num.empty()) cur.push_back(static_cast<mckay::point_t>(std::stoul(num)));
      num.clear();
      if (c == ')') cycles.push_back(cur);
    } else if (c != ' ') {
      num += c;
    }
  }
  return Permutation::from_cycles(degree, cycles);
}

inline PermGroup make(std::size_t degree, std::vector<std::string> const& gens) {
  std::vector<Permutation> g;
  for (auto const& s : gens) g.push_back(cyc(degree, s));
  return PermGroup::generated_by(degree, g);
}

inline PermGroup cyclic(std::size_t n) {
  std::string s = "(";
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? "," : "") + std::to_string(i);
  return make(n, {s + ")"});
}

inline PermGroup S3() { return make(3, {"(1,2)", "(1,2,3)"}); }
inline PermGroup D8() { return make(4, {"(1,2,3,4)", "(1,3)"}); }
inline PermGroup Q8() { return make(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"}); }
inline PermGroup A4() { return make(4, {"(1,2)(3,4)", "(1,2,3)"}); }
inline PermGroup S4() { return make(4, {"(1,2)", "(1,2,3,4)"}); }
inline PermGroup A5() { return make(5, {"(1,2,3,4,5)", "(1,2,3)"}); }
inline PermGroup SL23() { return make(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)", "(2,3,5)(6,7,8)"}); }
inline PermGroup C3C4() { return make(7, {"(1,2,3)", "(2,3)(4,5,6,7)"}); }
inline PermGroup C7C3() { return make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}); }
inline PermGroup C3sqC2() { return make(6, {"(1,2,3)", "(4,5,6)", "(2,3)(5,6)"}); }
inline PermGroup S3xS3() { return make(6, {"(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"}); }
inline PermGroup ASL23() { return make(9, {"(1,4,7)(2,5,8)(3,6,9)", "(2,5,8)(3,9,6)", "(4,5,6)(7,9,8)"}); }
inline PermGroup PSL28() {
  return make(9, {"(1,2)(3,4)(5,6)(7,8)", "(2,3,5,4,7,8,6)", "(1,9)(3,6)(4,7)(5,8)"});
}
inline PermGroup C4() { return cyclic(4); }
inline PermGroup C6() { return cyclic(6); }

// The solvable groups used across suites, with their names.
inline std::vector<std::pair<std::string, PermGroup>> solvable_zoo() {
  return {{"C2", cyclic(2)},     {"C3", cyclic(3)},   {"C5", cyclic(5)},     {"C6", C6()},
          {"S3", S3()},          {"D8", D8()},        {"Q8", Q8()},          {"A4", A4()},
          {"S4", S4()},          {"SL23", SL23()},    {"C3C4", C3C4()},      {"C7C3", C7C3()},
          {"C3sqC2", C3sqC2()},  {"S3xS3", S3xS3()}};
}

inline std::multiset<std::uint64_t> degrees(PermGroup const& G) {
  auto ctx = mckay::context(G);
  std::multiset<std::uint64_t> out;
  for (std::size_t i = 0; i < ctx->irr_count(); ++i) out.insert(ctx->irr(i).degree());
  return out;
}

}  // namespace testgroups

#endif  // MCKAY_TESTS_SUPPORT_HPP_
