#ifndef MCKAY_CORRESPONDENCES_HPP_
#define MCKAY_CORRESPONDENCES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "errors.hpp"
#include "permgroup.hpp"

namespace mckay {

//! Irr(G|theta) for theta in Irr(N), N normal in G.
struct CliffordBlock {
  GroupRef group;
  PermGroup normal;
  ClassFunction theta;
  PermGroup inertia;
  std::vector<std::size_t> members;  // indices into Irr(G)
};

//! Fast exponentiation of a class function pointwise (k >= 0).
inline ClassFunction pointwise_power(ClassFunction const& lambda, std::uint64_t k) {
  std::vector<Cyclotomic> v;
  for (auto const& x : lambda.values()) {
    Cyclotomic acc(1), base = x;
    for (std::uint64_t e = k; e != 0; e >>= 1u) {
      if (e & 1u) acc *= base;
      if (e > 1) base *= base;
    }
    v.push_back(std::move(acc));
  }
  return {lambda.group(), std::move(v)};
}

//! Stabilizer of theta in G under theta^g(n) = theta(g n g^-1).
inline PermGroup inertia_group(PermGroup const& G, ClassFunction const& theta) {
  auto const& N = theta.group()->group();
  if (!is_normal(N, G)) raise(ErrorKind::NotNormal, "inertia_group: N is not normal in G");
  std::vector<Permutation> keep;
  for (auto const& g : G.elements()) {
    if (N.contains(g) || conjugate_class_function(theta, g) == theta) keep.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(keep));
}

//! For A normalizing N (both inside one ambient group), the least index in
//! the A-orbit of each character of N.
inline std::vector<std::size_t> orbit_representatives(PermGroup const& A, GroupRef const& N) {
  std::size_t const n = N->irr_count();
  std::vector<std::vector<std::size_t>> action;
  for (auto const& a : A.generators()) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = require_table_index(conjugate_class_function(N->irr(i), a),
                                   "conjugate of an irreducible is irreducible");
    }
    action.push_back(std::move(img));
  }
  detail::UnionFind uf(n);
  for (auto const& img : action) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, img[i]);
  }
  std::vector<std::size_t> least(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = uf.find(i);
    least[r] = std::min(least[r], i);
  }
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) rep[i] = least[uf.find(i)];
  return rep;
}

inline CliffordBlock clifford_block(GroupRef const& G, ClassFunction const& theta) {
  CliffordBlock b{G, theta.group()->group(), theta, inertia_group(G->group(), theta), {}};
  for (std::size_t i = 0; i < G->irr_count(); ++i) {
    if (lies_over(G->irr(i), theta)) b.members.push_back(i);
  }
  return b;
}

//! psi in Irr(G_theta | theta) -> psi^G in Irr(G | theta).
inline ClassFunction clifford_up(ClassFunction const& psi, ClassFunction const& theta,
                                 GroupRef const& G) {
  if (!lies_over(psi, theta)) raise(ErrorKind::NotOverTheta, "clifford_up: psi does not lie over theta");
  auto chi = induce(psi, G);
  ensure(table_index(chi).has_value(), "Clifford correspondent is irreducible");
  return chi;
}

//! chi in Irr(G | theta) -> the unique psi in Irr(G_theta | theta) under chi.
inline ClassFunction clifford_down(ClassFunction const& chi, ClassFunction const& theta,
                                   GroupRef const& inertia) {
  if (!lies_over(chi, theta)) raise(ErrorKind::NotOverTheta, "clifford_down: chi does not lie over theta");
  auto r = restrict(chi, inertia);
  std::optional<std::size_t> found;
  for (auto i : constituents(r)) {
    if (lies_over(inertia->irr(i), theta)) {
      ensure(!found.has_value(), "Clifford correspondent is unique");
      found = i;
    }
  }
  ensure(found.has_value(), "chi restricted to G_theta has a constituent over theta");
  return inertia->irr(*found);
}

inline void require_extension(ClassFunction const& gamma, ClassFunction const& theta) {
  if (restrict(gamma, theta.group()) != theta) {
    raise(ErrorKind::NotAnExtension, "gamma does not restrict to theta");
  }
}

//! beta * gamma, with gamma an extension of theta.
inline ClassFunction gallagher_multiply(ClassFunction const& beta, ClassFunction const& gamma,
                                        ClassFunction const& theta) {
  require_extension(gamma, theta);
  ensure(kernel_contains(beta, theta.group()->group()), "Gallagher factor has N in its kernel");
  auto out = tensor(beta, gamma);
  ensure(table_index(out).has_value(), "Gallagher product is irreducible");
  return out;
}

//! psi * conj(gamma) for linear gamma extending theta; the result has N in
//! its kernel.
inline ClassFunction gallagher_divide(ClassFunction const& psi, ClassFunction const& gamma,
                                      ClassFunction const& theta) {
  if (gamma.degree() != 1) raise(ErrorKind::NotLinear, "gallagher_divide needs a linear gamma");
  require_extension(gamma, theta);
  auto out = tensor(psi, gamma.conj());
  if (!kernel_contains(out, theta.group()->group())) {
    raise(ErrorKind::NotOverTheta, "gallagher_divide: psi does not lie over theta");
  }
  return out;
}

//! Least index of an irreducible of U restricting to theta, if any.
inline std::optional<std::size_t> extends_to(ClassFunction const& theta, GroupRef const& U) {
  auto const& N = theta.group()->group();
  if (!is_normal(N, U->group())) raise(ErrorKind::NotNormal, "extends_to: N is not normal in U");
  auto const d = theta.degree();
  for (std::size_t i = 0; i < U->irr_count(); ++i) {
    auto chi = U->irr(i);
    if (chi.degree() == d && restrict(chi, theta.group()) == theta) return i;
  }
  return std::nullopt;
}

//! Linear extension of theta to U whose order is a power of p: the least
//! extension gamma0 of order p^a m is replaced by gamma0^u with u = 1 mod p^a
//! and u = 0 mod m.
inline ClassFunction p_power_order_extension(ClassFunction const& theta, GroupRef const& U,
                                             std::uint64_t p) {
  if (theta.degree() != 1) raise(ErrorKind::NotLinear, "p_power_order_extension needs linear theta");
  ensure(detail::is_p_power(det_order(theta), p), "o(theta) is a p-power");
  auto idx = extends_to(theta, U);
  if (!idx) raise(ErrorKind::NoExtension, "theta does not extend to U");
  auto gamma0 = U->irr(*idx);
  std::uint64_t const o = det_order(gamma0);
  std::uint64_t const pa = detail::p_part(o, p);
  std::uint64_t const m = o / pa;
  std::uint64_t u = 0;
  for (std::uint64_t t = 0; t < pa; ++t) {
    if ((t * m) % pa == 1 % pa) {
      u = t * m;
      break;
    }
  }
  if (m == 1) u = 1;
  auto gamma = pointwise_power(gamma0, u);
  ensure(table_index(gamma).has_value(), "power of a linear character is irreducible");
  ensure(restrict(gamma, theta.group()) == theta, "p-part of an extension still extends theta");
  ensure(detail::is_p_power(det_order(gamma), p), "extension has p-power order");
  return gamma;
}

//! P-invariant irreducible constituents of chi restricted to L (L normal).
inline std::vector<ClassFunction> p_invariant_constituents(ClassFunction const& chi, GroupRef const& L,
                                                           PermGroup const& P) {
  auto const& G = chi.group()->group();
  if (!is_normal(L->group(), G)) raise(ErrorKind::NotNormal, "p_invariant_constituents: L not normal");
  std::vector<ClassFunction> out;
  for (auto i : constituents(restrict(chi, L))) {
    auto theta = L->irr(i);
    bool inv = std::all_of(P.generators().begin(), P.generators().end(), [&](Permutation const& x) {
      return conjugate_class_function(theta, x) == theta;
    });
    if (inv) out.push_back(std::move(theta));
  }
  ensure(!out.empty(), "p'-degree chi has a P-invariant constituent");
  auto reps = orbit_representatives(normalizer(G, P), L);
  auto first = reps[*table_index(out.front())];
  for (auto const& t : out) {
    ensure(reps[*table_index(t)] == first, "P-invariant constituents are N_G(P)-conjugate");
  }
  return out;
}

//! G' O^{p'}(G): the smallest normal subgroup with abelian p'-quotient.
inline PermGroup abelian_pprime_residual(PermGroup const& G, std::uint64_t p) {
  auto gens = derived_subgroup(G).generators();
  auto const R = p_residual(G, p);
  gens.insert(gens.end(), R.generators().begin(), R.generators().end());
  return normal_closure(G, gens);
}

//! The linear characters of G whose kernel contains G' O^{p'}(G): the
//! ordinary lifts of the linear Brauer characters.
inline std::vector<std::size_t> linear_ibr_lifts(GroupRef const& G, std::uint64_t p) {
  auto M = abelian_pprime_residual(G->group(), p);
  std::vector<std::size_t> out;
  for (auto i : linear_characters(*G)) {
    if (kernel_contains(G->irr(i), M)) out.push_back(i);
  }
  return out;
}

}  // namespace mckay

#endif  // MCKAY_CORRESPONDENCES_HPP_
