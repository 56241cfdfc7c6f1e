#ifndef MCKAY_BIJECTION_HPP_
#define MCKAY_BIJECTION_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartable.hpp"
#include "correspondences.hpp"
#include "errors.hpp"
#include "permgroup.hpp"

namespace mckay {

enum class StepKind { Base, Op, Opp, Leftover };

inline char const* to_string(StepKind k) {
  switch (k) {
    case StepKind::Base: return "base";
    case StepKind::Op: return "O_p";
    case StepKind::Opp: return "O_p'";
    case StepKind::Leftover: return "leftover";
  }
  return "?";
}

//! One level of the recursion a pair went through.  theta indexes Irr of the
//! normal subgroup used at that level, gamma indexes Irr of the group the
//! extension lives on (G_theta for O_p, G for O_p').
struct TraceStep {
  StepKind kind = StepKind::Base;
  std::uint64_t group_order = 0;
  std::optional<std::size_t> theta;
  std::optional<std::size_t> gamma;

  std::string to_string() const {
    std::string s = std::string(mckay::to_string(kind)) + "[" + std::to_string(group_order) + "]";
    if (theta) s += " theta=" + std::to_string(*theta);
    if (gamma) s += " gamma=" + std::to_string(*gamma);
    return s;
  }
  friend bool operator==(TraceStep const&, TraceStep const&) = default;
};

//! Counts of the identities asserted while building.
struct BuildStats {
  std::size_t recursion_calls = 0;
  std::size_t blocks = 0;
  std::size_t mackey_checks = 0;
  std::size_t factorization_checks = 0;
  std::size_t clifford_round_trips = 0;
  std::size_t gallagher_round_trips = 0;
  std::size_t restriction_checks = 0;
  std::size_t injectivity_checks = 0;
  std::size_t leftover_pairs = 0;

  BuildStats& operator+=(BuildStats const& o) {
    recursion_calls += o.recursion_calls;
    blocks += o.blocks;
    mackey_checks += o.mackey_checks;
    factorization_checks += o.factorization_checks;
    clifford_round_trips += o.clifford_round_trips;
    gallagher_round_trips += o.gallagher_round_trips;
    restriction_checks += o.restriction_checks;
    injectivity_checks += o.injectivity_checks;
    leftover_pairs += o.leftover_pairs;
    return *this;
  }
};

//! A bijection Irr_{p'}(G) -> Irr_{p'}(N_G(P)) together with how each pair
//! was produced.  Indices refer to the canonical tables of G and N_G(P).
struct McKayBijection {
  GroupRef group;
  std::uint64_t prime = 0;
  PermGroup sylow;
  GroupRef normalizer;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by source
  std::vector<std::vector<TraceStep>> trace;               // aligned with pairs
  BuildStats stats;

  std::size_t image(std::size_t chi) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == chi) return pairs[i].second;
    }
    raise(ErrorKind::AssertionFailure, "character " + std::to_string(chi) + " is not in the domain");
  }

  std::vector<TraceStep> const& trace_of(std::size_t chi) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == chi) return trace[i];
    }
    raise(ErrorKind::AssertionFailure, "character " + std::to_string(chi) + " is not in the domain");
  }

  //! FNV-1a over the pairs and their traces.
  std::string trace_digest() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
      for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      mix(pairs[i].first);
      mix(pairs[i].second);
      for (auto const& s : trace[i]) {
        mix(static_cast<std::uint64_t>(s.kind));
        mix(s.group_order);
        mix(s.theta ? *s.theta + 1 : 0);
        mix(s.gamma ? *s.gamma + 1 : 0);
      }
    }
    static char const* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = hex[h & 0xfu];
      h >>= 4u;
    }
    return out;
  }
};

namespace detail {

inline std::vector<std::size_t> lying_over(GroupRef const& G, std::vector<std::size_t> const& among,
                                           ClassFunction const& theta) {
  std::vector<std::size_t> out;
  for (auto i : among) {
    if (lies_over(G->irr(i), theta)) out.push_back(i);
  }
  return out;
}

inline void check_product(PermGroup const& A, PermGroup const& B, PermGroup const& whole,
                          std::string const& anchor, BuildStats& stats) {
  auto const meet = intersection(A, B);
  ensure(A.order() * B.order() == whole.order() * meet.order(), anchor,
         std::to_string(A.order()) + "*" + std::to_string(B.order()) + "/" +
             std::to_string(meet.order()) + " != " + std::to_string(whole.order()));
  ++stats.factorization_checks;
}

inline McKayBijection build(GroupRef const& G, PermGroup const& P, std::uint64_t p);

inline McKayBijection base_case(GroupRef const& G, PermGroup const& P, std::uint64_t p) {
  McKayBijection f{G, p, P, G, {}, {}, {}};
  for (auto i : irr_pprime(*G, p)) {
    f.pairs.emplace_back(i, i);
    f.trace.push_back({TraceStep{StepKind::Base, G->order(), std::nullopt, std::nullopt}});
  }
  return f;
}

inline void finish(McKayBijection& f, std::vector<std::size_t> const& src,
                   std::vector<std::size_t> const& dst) {
  // sort by source and check bijectivity onto the target set
  std::vector<std::size_t> order(f.pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return f.pairs[a].first < f.pairs[b].first; });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<TraceStep>> trace;
  for (auto i : order) {
    pairs.push_back(f.pairs[i]);
    trace.push_back(std::move(f.trace[i]));
  }
  f.pairs = std::move(pairs);
  f.trace = std::move(trace);
  std::vector<std::size_t> a, b;
  for (auto const& [x, y] : f.pairs) {
    a.push_back(x);
    b.push_back(y);
  }
  std::sort(b.begin(), b.end());
  ensure(a == src, "bijection is defined on all of Irr_p'(G) exactly once");
  ensure(b == dst, "bijection is onto Irr_p'(N_G(P)) and injective");
}

inline McKayBijection op_branch(GroupRef const& G, PermGroup const& P, std::uint64_t p,
                                PermGroup const& N, PermGroup const& NGP) {
  auto const& g = G->group();
  auto NG = context(NGP);
  auto Nc = context(N);
  auto Pc = context(P);
  McKayBijection f{G, p, P, NG, {}, {}, {}};
  auto& stats = f.stats;

  // linear characters of N that extend to P, up to N_G(P)-conjugacy
  std::set<std::size_t> extendible;
  for (auto i : linear_characters(*Pc)) {
    extendible.insert(require_table_index(restrict(Pc->irr(i), Nc), "restriction of a linear is irreducible"));
  }
  auto reps = orbit_representatives(NGP, Nc);
  std::vector<std::size_t> delta;
  for (auto t : extendible) {
    ensure(extendible.count(reps[t]) == 1, "N_G(P) permutes the P-extendible linears of N");
    if (reps[t] == t) delta.push_back(t);
  }

  auto const src = irr_pprime(*G, p);
  auto const dst = irr_pprime(*NG, p);

  // every p'-degree character lies over a linear character of O_p(G)
  for (auto i : src) {
    auto cs = constituents(restrict(G->irr(i), Nc));
    ensure(!cs.empty() && Nc->irr(cs.front()).degree() == 1,
           "p'-degree characters lie over linear characters of O_p(G)");
  }
  // theta-blocks partition both sides
  for (auto i : src) {
    std::size_t hits = 0;
    for (auto t : delta) hits += lies_over(G->irr(i), Nc->irr(t)) ? 1 : 0;
    ensure(hits == 1, "Irr_p'(G) is the disjoint union of the blocks over Delta");
  }
  for (auto j : dst) {
    std::size_t hits = 0;
    for (auto t : delta) hits += lies_over(NG->irr(j), Nc->irr(t)) ? 1 : 0;
    ensure(hits == 1, "Irr_p'(N_G(P)) is the disjoint union of the blocks over Delta");
  }

  PermGroup const H = hall_p_complement(g, p);
  PermGroup const NH = intersection(H, NGP);
  ensure(NH.order() * P.order() == NGP.order(), "N_H(P) is a p-complement of N_G(P)");
  auto Hc = context(H);
  auto NHc = context(NH);

  for (auto t : delta) {
    auto const theta = Nc->irr(t);
    PermGroup const Gt = inertia_group(g, theta);
    ensure(is_subgroup(P, Gt), "P <= G_theta");
    auto Gtc = context(Gt);
    auto const gamma = p_power_order_extension(theta, Gtc, p);
    auto const gamma_idx = *table_index(gamma);

    Epimorphism pi(Gt, N);
    auto Q = context(pi.image_group());
    PermGroup const Pbar = pi.image(P);
    auto sub = build(Q, Pbar, p);
    stats += sub.stats;

    PermGroup const NGtP = normalizer(Gt, P);
    ensure(NGtP == intersection(NGP, Gt), "N_{G_theta}(P) == N_G(P) cap G_theta");
    ensure(pi.image(NGtP) == sub.normalizer->group(), "N_{G_theta}(P)/N == N_{G_theta/N}(PN/N)");
    auto NGtPc = context(NGtP);
    auto const gamma_n = restrict(gamma, NGtPc);

    check_product(Gt, H, g, "G == G_theta H", stats);
    check_product(NGtP, NH, NGP, "N_G(P) == N_{G_theta}(P) N_H(P)", stats);
    auto GtH = context(intersection(Gt, H));
    auto NHt = context(intersection(NH, Gt));

    auto const block = lying_over(G, src, theta);
    auto const target = lying_over(NG, dst, theta);
    std::vector<std::size_t> images;
    ++stats.blocks;
    for (auto i : block) {
      auto const chi = G->irr(i);
      auto const psi = clifford_down(chi, theta, Gtc);
      ensure(clifford_up(psi, theta, G) == chi, "Clifford round trip on G");
      ensure(chi.degree() == (g.order() / Gt.order()) * psi.degree(), "chi(1) == |G:G_theta| psi(1)");
      ++stats.clifford_round_trips;
      auto const beta = gallagher_divide(psi, gamma, theta);
      ensure(gallagher_multiply(beta, gamma, theta) == psi, "Gallagher round trip on G_theta");
      ++stats.gallagher_round_trips;
      auto const bbar = deflate(beta, pi, Q);
      auto const bi = require_table_index(bbar, "deflated Gallagher factor is irreducible");
      auto const& sub_trace = sub.trace_of(bi);
      auto const image_bar = sub.normalizer->irr(sub.image(bi));
      auto const lifted = inflate(image_bar, pi, NGtPc);
      auto const gpsi = gallagher_multiply(lifted, gamma_n, theta);
      ensure(gallagher_divide(gpsi, gamma_n, theta) == lifted, "Gallagher round trip on N_{G_theta}(P)");
      ++stats.gallagher_round_trips;
      auto const out = clifford_up(gpsi, theta, NG);
      ensure(clifford_down(out, theta, NGtPc) == gpsi, "Clifford round trip on N_G(P)");
      ++stats.clifford_round_trips;

      // Mackey: chi_H == (psi_{G_theta cap H})^H and
      // (g(psi)_{N_{H cap G_theta}(P)})^{N_H(P)} == (g(psi)^{N_G(P)})_{N_H(P)}
      ensure(restrict(chi, Hc) == induce(restrict(psi, GtH), Hc), "Mackey: chi_H == (psi_{G_theta cap H})^H");
      ensure(induce(restrict(gpsi, NHt), NHc) == restrict(out, NHc),
             "Mackey: (g(psi) restricted to N_{H cap G_theta}(P)) induced to N_H(P)");
      stats.mackey_checks += 2;

      auto const oi = require_table_index(out, "image is irreducible");
      images.push_back(oi);
      std::vector<TraceStep> tr{TraceStep{StepKind::Op, g.order(), t, gamma_idx}};
      tr.insert(tr.end(), sub_trace.begin(), sub_trace.end());
      f.pairs.emplace_back(i, oi);
      f.trace.push_back(std::move(tr));
    }
    std::sort(images.begin(), images.end());
    ensure(images == target, "f_theta maps Irr_p'(G|theta) onto Irr_p'(N_G(P)|theta)");
  }
  finish(f, src, dst);
  return f;
}

inline McKayBijection opp_branch(GroupRef const& G, PermGroup const& P, std::uint64_t p,
                                 PermGroup const& K, PermGroup const& NGP) {
  auto const& g = G->group();
  auto NG = context(NGP);
  auto Kc = context(K);
  McKayBijection f{G, p, P, NG, {}, {}, {}};
  auto& stats = f.stats;

  // linear characters of K extending to G, with their least extensions
  std::vector<std::pair<std::size_t, std::size_t>> delta;
  for (auto i : linear_characters(*Kc)) {
    if (auto e = extends_to(Kc->irr(i), G)) delta.emplace_back(i, *e);
  }

  Epimorphism pi(g, K);
  auto Q = context(pi.image_group());
  PermGroup const Pbar = pi.image(P);
  auto sub = build(Q, Pbar, p);
  stats += sub.stats;
  ensure(pi.image(NGP) == sub.normalizer->group(), "N_{G/K}(PK/K) == N_G(P)K/K");

  PermGroup const C = centralizer(K, P);
  ensure(intersection(K, NGP) == C, "N_K(P) == C_K(P)");
  auto Cc = context(C);

  // theta -> theta_C is injective on Delta
  std::vector<ClassFunction> seen;
  for (auto const& [t, e] : delta) {
    auto rc = restrict(Kc->irr(t), Cc);
    ensure(std::find(seen.begin(), seen.end(), rc) == seen.end(),
           "theta -> theta_{C_K(P)} is injective on Delta");
    seen.push_back(std::move(rc));
    ++stats.injectivity_checks;
  }

  PermGroup const NGPK = join(NGP, K);
  auto NGPKc = context(NGPK);
  auto const rb = restriction_bijection(NGPKc, K, NG);
  ++stats.restriction_checks;
  std::map<std::size_t, std::size_t> r;
  for (auto const& [a, b] : rb) r[a] = b;

  auto const src = irr_pprime(*G, p);
  auto const dst = irr_pprime(*NG, p);
  std::vector<bool> src_used(G->irr_count(), false), dst_used(NG->irr_count(), false);

  for (auto const& [t, e] : delta) {
    auto const theta = Kc->irr(t);
    auto const gamma = G->irr(e);
    auto const theta_c = restrict(theta, Cc);
    auto const gamma_n = restrict(gamma, NG);
    auto const block = lying_over(G, src, theta);
    auto const target = lying_over(NG, dst, theta_c);
    std::vector<std::size_t> images;
    ++stats.blocks;
    for (auto i : block) {
      ensure(!src_used[i], "source blocks over Delta are disjoint");
      src_used[i] = true;
      auto const chi = G->irr(i);
      auto const beta = gallagher_divide(chi, gamma, theta);
      ensure(gallagher_multiply(beta, gamma, theta) == chi, "Gallagher round trip on G");
      ++stats.gallagher_round_trips;
      auto const bi = require_table_index(deflate(beta, pi, Q), "deflated Gallagher factor is irreducible");
      auto const& sub_trace = sub.trace_of(bi);
      auto const lifted = inflate(sub.normalizer->irr(sub.image(bi)), pi, NGPKc);
      auto const li = require_table_index(lifted, "inflation is irreducible");
      ensure(r.count(li) == 1, "restriction bijection covers Irr(N_G(P)K/K)");
      auto const restricted = NG->irr(r.at(li));
      ensure(restrict(lifted, NG) == restricted, "restriction bijection agrees with restriction");
      auto const out = gallagher_multiply(restricted, gamma_n, theta_c);
      ensure(gallagher_divide(out, gamma_n, theta_c) == restricted, "Gallagher round trip on N_G(P)");
      ++stats.gallagher_round_trips;
      auto const oi = require_table_index(out, "image is irreducible");
      ensure(!dst_used[oi], "target blocks over Delta are disjoint");
      dst_used[oi] = true;
      images.push_back(oi);
      std::vector<TraceStep> tr{TraceStep{StepKind::Opp, g.order(), t, e}};
      tr.insert(tr.end(), sub_trace.begin(), sub_trace.end());
      f.pairs.emplace_back(i, oi);
      f.trace.push_back(std::move(tr));
    }
    std::sort(images.begin(), images.end());
    ensure(images == target, "f_theta maps Irr_p'(G|theta) onto Irr_p'(N_G(P)|theta_C)");
  }

  std::vector<std::size_t> left_src, left_dst;
  for (auto i : src) {
    if (!src_used[i]) left_src.push_back(i);
  }
  for (auto j : dst) {
    if (!dst_used[j]) left_dst.push_back(j);
  }
  ensure(left_src.size() == left_dst.size(), "leftover characters outside Delta are equinumerous");
  for (std::size_t k = 0; k < left_src.size(); ++k) {
    f.pairs.emplace_back(left_src[k], left_dst[k]);
    f.trace.push_back({TraceStep{StepKind::Leftover, g.order(), std::nullopt, std::nullopt}});
    ++stats.leftover_pairs;
  }
  finish(f, src, dst);
  return f;
}

inline McKayBijection build(GroupRef const& G, PermGroup const& P, std::uint64_t p) {
  auto const& g = G->group();
  PermGroup const NGP = normalizer(g, P);
  McKayBijection f;
  if (NGP.order() == g.order()) {
    f = base_case(G, P, p);
  } else if (PermGroup N = core_p(g, p); !N.is_trivial()) {
    f = op_branch(G, P, p, N, NGP);
  } else {
    PermGroup K = core_pprime(g, p);
    ensure(!K.is_trivial(), "O_p(G) == 1 forces O_p'(G) > 1 in a p-solvable group");
    f = opp_branch(G, P, p, K, NGP);
  }
  ++f.stats.recursion_calls;
  return f;
}

}  // namespace detail

//! The bijection, built by induction on |G|: O_p(G) > 1
//! splits into Clifford blocks over P-extendible linears of O_p(G); otherwise
//! O_p'(G) > 1 is factored out with Gallagher correspondences.
inline McKayBijection build_bijection(PermGroup const& G, std::uint64_t p) {
  if (!detail::is_prime(p)) raise(ErrorKind::BadFormat, std::to_string(p) + " is not prime");
  if (!is_p_solvable(G, p)) {
    raise(ErrorKind::NotPSolvable, G.to_string() + " is not " + std::to_string(p) + "-solvable");
  }
  return detail::build(context(G), sylow_subgroup(G, p), p);
}

// ---------------------------------------------------------------------------
// Decomposition numbers against linear Brauer characters
// ---------------------------------------------------------------------------

inline Integer as_nonnegative_integer(Rational const& r, std::string_view anchor) {
  ensure(denominator(r) == 1 && r >= 0, anchor, "value " + to_string(r));
  return numerator(r);
}

//! [chi_H, tau_H] for a given p-complement H.
inline Integer decomposition_number_on(ClassFunction const& chi, ClassFunction const& tau,
                                       PermGroup const& H) {
  auto Hc = context(H);
  return as_nonnegative_integer(inner_product(restrict(chi, Hc), restrict(tau, Hc)),
                                "decomposition number is a nonnegative integer");
}

//! d_{chi tau} for linear Brauer tau given by its ordinary lift.
inline Integer decomposition_number_linear(ClassFunction const& chi, ClassFunction const& tau,
                                           std::uint64_t p) {
  ClassFunction::check_same(chi, tau);
  auto const& G = chi.group();
  auto lifts = linear_ibr_lifts(G, p);
  auto idx = table_index(tau);
  if (!idx || std::find(lifts.begin(), lifts.end(), *idx) == lifts.end()) {
    raise(ErrorKind::NotALift, "tau is not the lift of a linear Brauer character");
  }
  return decomposition_number_on(chi, tau, hall_p_complement(G->group(), p));
}

struct EqualityCheck {
  std::size_t chi = 0;
  std::size_t image = 0;
  std::size_t tau = 0;        // index in Irr(G)
  std::size_t tau_local = 0;  // index of tau restricted to N_G(P)
  Integer d_group;
  Integer d_local;
  bool ok = false;
};

struct EqualityReport {
  McKayBijection bijection;
  std::vector<EqualityCheck> checks;
  std::size_t pprime_group = 0;
  std::size_t pprime_local = 0;
  bool passed = false;
};

inline EqualityReport verify_decomposition_equalities(PermGroup const& G, std::uint64_t p) {
  EqualityReport rep{build_bijection(G, p), {}, 0, 0, true};
  auto const& f = rep.bijection;
  auto Gc = f.group;
  auto NG = f.normalizer;
  rep.pprime_group = irr_pprime(*Gc, p).size();
  rep.pprime_local = irr_pprime(*NG, p).size();
  rep.passed = rep.pprime_group == rep.pprime_local;
  PermGroup const H = hall_p_complement(G, p);
  PermGroup const HN = hall_p_complement(NG->group(), p);
  auto const local_lifts = linear_ibr_lifts(NG, p);
  for (auto t : linear_ibr_lifts(Gc, p)) {
    auto const tau = Gc->irr(t);
    auto const tau_n = restrict(tau, NG);
    auto const tl = require_table_index(tau_n, "restricted lift is irreducible");
    ensure(std::find(local_lifts.begin(), local_lifts.end(), tl) != local_lifts.end(),
           "tau restricted to N_G(P) lifts a linear Brauer character of N_G(P)");
    for (auto const& [chi, image] : f.pairs) {
      EqualityCheck c;
      c.chi = chi;
      c.image = image;
      c.tau = t;
      c.tau_local = tl;
      c.d_group = decomposition_number_on(Gc->irr(chi), tau, H);
      c.d_local = decomposition_number_on(NG->irr(image), tau_n, HN);
      c.ok = c.d_group == c.d_local;
      rep.passed = rep.passed && c.ok;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

struct TrivialColumnReport {
  std::vector<std::pair<std::size_t, Integer>> values;  // (chi, d_{chi 1})
  std::size_t ones = 0;
  std::size_t orbits_on_quotient = 0;    // N_G(P)-orbits on P/P'
  std::size_t orbits_on_characters = 0;  // N_G(P)-orbits on Irr(P/P')
  bool all_zero_one = true;
  bool passed = false;
};

//! Number of N-orbits on the linear characters of P.
inline std::size_t orbits_on_linear_characters(PermGroup const& NGP, PermGroup const& P) {
  auto Pc = context(P);
  auto reps = orbit_representatives(NGP, Pc);
  std::set<std::size_t> distinct;
  for (auto i : linear_characters(*Pc)) distinct.insert(reps[i]);
  return distinct.size();
}

inline TrivialColumnReport verify_trivial_column(PermGroup const& G, std::uint64_t p) {
  if (!is_p_solvable(G, p)) {
    raise(ErrorKind::NotPSolvable, G.to_string() + " is not " + std::to_string(p) + "-solvable");
  }
  TrivialColumnReport rep;
  auto Gc = context(G);
  PermGroup const H = hall_p_complement(G, p);
  auto const one = Gc->trivial_character();
  for (auto i : irr_pprime(*Gc, p)) {
    auto d = decomposition_number_on(Gc->irr(i), one, H);
    if (d > 1) rep.all_zero_one = false;
    if (d == 1) ++rep.ones;
    rep.values.emplace_back(i, d);
  }
  PermGroup const P = sylow_subgroup(G, p);
  PermGroup const NGP = normalizer(G, P);
  rep.orbits_on_quotient = conjugation_orbits_on_quotient(NGP, P, derived_subgroup(P));
  rep.orbits_on_characters = orbits_on_linear_characters(NGP, P);
  rep.passed = rep.all_zero_one && rep.ones == rep.orbits_on_quotient &&
               rep.orbits_on_quotient == rep.orbits_on_characters;
  return rep;
}

}  // namespace mckay

#endif  // MCKAY_BIJECTION_HPP_
