#ifndef MCKAY_COUNTEREXAMPLE_HPP_
#define MCKAY_COUNTEREXAMPLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "chartable.hpp"
#include "errors.hpp"
#include "permgroup.hpp"

namespace mckay {

enum class Provenance { Computed, Ingested };

//! A decomposition matrix: rows follow the ordinary degrees, columns the
//! Brauer degrees.  Column 0 must be the trivial Brauer character.
struct DecompositionRecord {
  std::string group;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> ordinary;
  std::vector<std::uint64_t> brauer;
  std::vector<std::vector<std::uint64_t>> rows;
  Provenance provenance = Provenance::Ingested;
  // expected verdicts per mode, as recorded alongside the data
  std::map<std::string, bool> expectations;

  void validate() const {
    if (rows.size() != ordinary.size()) {
      raise(ErrorKind::ShapeMismatch, std::to_string(rows.size()) + " rows for " +
                                          std::to_string(ordinary.size()) + " ordinary degrees");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != brauer.size()) {
        raise(ErrorKind::ShapeMismatch, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(brauer.size()));
      }
    }
    if (brauer.empty() || brauer[0] != 1) raise(ErrorKind::BadRecord, "first Brauer character must be trivial");
    if (!detail::is_prime(prime)) raise(ErrorKind::BadRecord, std::to_string(prime) + " is not prime");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < brauer.size(); ++j) s += rows[i][j] * brauer[j];
      if (s != ordinary[i]) {
        raise(ErrorKind::BadRecord, "row " + std::to_string(i + 1) + " sums to degree " + std::to_string(s) +
                                        ", expected " + std::to_string(ordinary[i]));
      }
    }
  }
};

enum class CounterexampleMode { NoEquality, GeExists, ZeroExists };

inline char const* to_string(CounterexampleMode m) {
  switch (m) {
    case CounterexampleMode::NoEquality: return "no-equality";
    case CounterexampleMode::GeExists: return "ge-exists";
    case CounterexampleMode::ZeroExists: return "zero-exists";
  }
  return "?";
}

inline CounterexampleMode parse_mode(std::string const& s) {
  if (s == "no-equality") return CounterexampleMode::NoEquality;
  if (s == "ge-exists") return CounterexampleMode::GeExists;
  if (s == "zero-exists") return CounterexampleMode::ZeroExists;
  raise(ErrorKind::BadFormat, "unknown mode '" + s + "'");
}

struct CounterexampleReport {
  std::string group;
  std::uint64_t prime = 0;
  CounterexampleMode mode = CounterexampleMode::NoEquality;
  std::vector<std::uint64_t> group_side;  // d_{chi 1} over p'-degree rows, descending
  std::vector<std::uint64_t> local_side;  // d_{psi 1} over Irr_p'(N_G(P)), descending
  bool passed = false;
  std::string detail;
};

//! d_{chi 1} over the p'-degree rows of the record.
inline std::vector<std::uint64_t> record_first_column(DecompositionRecord const& r) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.ordinary[i] % r.prime != 0) out.push_back(r.rows[i][0]);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

//! {d_{psi 1} : psi in Irr_p'(N_G(P))}, computed.
inline std::vector<std::uint64_t> local_first_column(PermGroup const& G, std::uint64_t p) {
  PermGroup const NGP = normalizer(G, sylow_subgroup(G, p));
  ensure(is_p_solvable(NGP, p), "N_G(P) is p-solvable");
  auto Nc = context(NGP);
  PermGroup const H = hall_p_complement(NGP, p);
  std::vector<std::uint64_t> out;
  for (auto i : irr_pprime(*Nc, p)) {
    auto d = decomposition_number_on(Nc->irr(i), Nc->trivial_character(), H);
    out.push_back(static_cast<std::uint64_t>(d));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

//! Whether a bijection a -> b with a_i >= b_f(i) exists: with both sorted
//! descending it exists iff the pointwise comparison holds.
inline bool dominating_matching_exists(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

inline std::string join_values(std::vector<std::uint64_t> const& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

//! Checks a recorded decomposition matrix against one of the three claims.
//! The group is needed for the modes that compare with N_G(P); when given,
//! the ordinary degrees are also checked against the computed table.
inline CounterexampleReport counterexample_check(DecompositionRecord const& record, CounterexampleMode mode,
                                                 std::optional<PermGroup> const& G) {
  record.validate();
  CounterexampleReport rep;
  rep.group = record.group;
  rep.prime = record.prime;
  rep.mode = mode;
  rep.group_side = record_first_column(record);

  if (G && G->order() <= enumeration_cap()) {
    auto ctx = context(*G);
    std::vector<std::uint64_t> computed, recorded = record.ordinary;
    for (std::size_t i = 0; i < ctx->irr_count(); ++i) computed.push_back(ctx->irr(i).degree());
    std::sort(computed.begin(), computed.end());
    std::sort(recorded.begin(), recorded.end());
    if (computed != recorded) {
      raise(ErrorKind::InconsistentDegrees, "record degrees " + join_values(recorded) +
                                                " differ from the computed table " + join_values(computed));
    }
  }

  if (mode == CounterexampleMode::ZeroExists) {
    rep.passed = std::find(rep.group_side.begin(), rep.group_side.end(), 0u) != rep.group_side.end();
    rep.detail = "p'-degree first column " + join_values(rep.group_side);
    return rep;
  }
  if (!G) raise(ErrorKind::GroupUnavailable, "mode " + std::string(to_string(mode)) + " needs the group");
  rep.local_side = local_first_column(*G, record.prime);
  auto const lhs = join_values(rep.group_side), rhs = join_values(rep.local_side);
  if (mode == CounterexampleMode::NoEquality) {
    rep.passed = rep.group_side != rep.local_side;
    rep.detail = lhs + (rep.passed ? " != " : " == ") + rhs;
  } else {
    rep.passed = dominating_matching_exists(rep.group_side, rep.local_side);
    rep.detail = lhs + (rep.passed ? " dominates " : " does not dominate ") + rhs;
  }
  return rep;
}

}  // namespace mckay

#endif  // MCKAY_COUNTEREXAMPLE_HPP_
