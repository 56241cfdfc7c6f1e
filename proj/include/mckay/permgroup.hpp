#ifndef MCKAY_PERMGROUP_HPP_
#define MCKAY_PERMGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace mckay {

//! Largest group order for which elements are enumerated.  Overridden by the
//! MCKAY_ENUMERATION_CAP environment variable.
inline std::uint64_t enumeration_cap() {
  static std::uint64_t const cap = [] {
    if (char const* env = std::getenv("MCKAY_ENUMERATION_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{100000};
  }();
  return cap;
}

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

//! Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  return p_part(n, p) == n;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

//! One level of a base and strong generating set: the fundamental orbit of
//! base_point under the generators fixing the earlier base points, with a
//! transversal u[beta] mapping base_point to beta.
struct BsgsLevel {
  point_t base_point = 0;
  std::vector<point_t> orbit;
  std::vector<std::int32_t> slot;  // point -> index into transversal, or -1
  std::vector<Permutation> transversal;

  bool in_orbit(point_t x) const { return slot[x] >= 0; }
  Permutation const& rep(point_t x) const { return transversal[slot[x]]; }
};

//! Immutable permutation group.  Holds a base and strong generating set built
//! by deterministic Schreier-Sims and, when the order does not exceed
//! enumeration_cap(), the sorted list of all elements.
//!
//! Copies share state.
class PermGroup {
 public:
  PermGroup() : PermGroup(generated_by(0, {})) {}

  //! Schreier-Sims on the given generators.  Identity generators are dropped.
  static PermGroup generated_by(std::size_t degree,
                                std::vector<Permutation> const& gens) {
    auto d = std::make_shared<Data>();
    d->degree = degree;
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        raise(ErrorKind::MalformedPermutation,
              "generator of degree " + std::to_string(g.degree()) +
                  " in a group of degree " + std::to_string(degree));
      }
      if (!g.is_identity() &&
          std::find(d->gens.begin(), d->gens.end(), g) == d->gens.end()) {
        d->gens.push_back(g);
      }
    }
    schreier_sims(*d);
    if (d->order <= enumeration_cap()) {
      enumerate(*d);
    }
    return PermGroup(std::move(d));
  }

  static PermGroup trivial(std::size_t degree) { return generated_by(degree, {}); }

  //! Builds the subgroup whose elements are exactly `elements` (which must be
  //! closed under multiplication).  Generators are chosen greedily in
  //! ascending element order, so the result is deterministic.
  static PermGroup from_elements(std::size_t degree,
                                 std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> current;
    current.insert(Permutation::identity(degree));
    for (auto const& x : elements) {
      if (current.count(x) != 0) continue;
      gens.push_back(x);
      // extend the closure by BFS from the existing elements
      std::vector<Permutation> frontier(current.begin(), current.end());
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (auto const& y : frontier) {
          for (auto const& g : gens) {
            Permutation z = y * g;
            if (current.insert(z).second) next.push_back(std::move(z));
          }
        }
        frontier = std::move(next);
      }
    }
    PermGroup out = generated_by(degree, gens);
    ensure(out.order() == elements.size(), "from_elements: input is not a subgroup");
    return out;
  }

  std::size_t degree() const noexcept { return d_->degree; }
  std::vector<Permutation> const& generators() const noexcept { return d_->gens; }
  std::uint64_t order() const noexcept { return d_->order; }
  std::vector<BsgsLevel> const& levels() const noexcept { return d_->levels; }

  std::vector<point_t> base() const {
    std::vector<point_t> b;
    for (auto const& l : d_->levels) b.push_back(l.base_point);
    return b;
  }

  Permutation identity() const { return Permutation::identity(degree()); }

  bool is_trivial() const noexcept { return d_->order == 1; }

  //! Sift through the stabilizer chain; O(|base| * degree).
  bool contains(Permutation const& g) const {
    if (g.degree() != degree()) return false;
    auto [res, depth] = sift(*d_, g, 0);
    return depth == d_->levels.size() && res.is_identity();
  }

  bool is_enumerated() const noexcept { return !d_->elements.empty(); }

  //! All elements in ascending lexicographic order of image lists.
  std::vector<Permutation> const& elements() const {
    if (!is_enumerated()) {
      raise(ErrorKind::GroupTooLarge,
            "order " + std::to_string(order()) + " exceeds enumeration cap " +
                std::to_string(enumeration_cap()));
    }
    return d_->elements;
  }

  std::optional<std::size_t> index_of(Permutation const& g) const {
    elements();
    auto it = d_->index.find(g);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require_index(Permutation const& g) const {
    auto i = index_of(g);
    if (!i) raise(ErrorKind::NotASubgroup, "element " + g.to_string() + " not in group");
    return *i;
  }

  //! Equality as sets of permutations.
  friend bool operator==(PermGroup const& a, PermGroup const& b) {
    if (a.d_ == b.d_) return true;
    if (a.degree() != b.degree() || a.order() != b.order()) return false;
    for (auto const& g : a.generators()) {
      if (!b.contains(g)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < d_->gens.size(); ++i) {
      if (i) s += ", ";
      s += d_->gens[i].to_string();
    }
    return s + "> of order " + std::to_string(order());
  }

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> gens;
    std::vector<BsgsLevel> levels;
    std::uint64_t order = 1;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  };

  explicit PermGroup(std::shared_ptr<Data const> d) : d_(std::move(d)) {}

  static std::pair<Permutation, std::size_t> sift(Data const& d, Permutation g,
                                                  std::size_t from) {
    for (std::size_t l = from; l < d.levels.size(); ++l) {
      auto const& lv = d.levels[l];
      point_t beta = g[lv.base_point];
      if (!lv.in_orbit(beta)) return {std::move(g), l};
      g = g * lv.rep(beta).inverse();
    }
    return {std::move(g), d.levels.size()};
  }

  static bool fixes_prefix(Permutation const& s, std::vector<BsgsLevel> const& lv,
                           std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j) {
      if (s[lv[j].base_point] != lv[j].base_point) return false;
    }
    return true;
  }

  static point_t first_moved(Permutation const& s) {
    for (std::size_t x = 0; x < s.degree(); ++x) {
      if (s[x] != x) return static_cast<point_t>(x);
    }
    return 0;
  }

  static void compute_level(Data& d, std::vector<Permutation> const& strong,
                            std::size_t i) {
    auto& lv = d.levels[i];
    lv.orbit.assign(1, lv.base_point);
    lv.slot.assign(d.degree, -1);
    lv.transversal.assign(1, Permutation::identity(d.degree));
    lv.slot[lv.base_point] = 0;
    std::vector<Permutation const*> si;
    for (auto const& s : strong) {
      if (fixes_prefix(s, d.levels, i)) si.push_back(&s);
    }
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      point_t gamma = lv.orbit[k];
      for (auto const* s : si) {
        point_t delta = (*s)[gamma];
        if (lv.slot[delta] < 0) {
          lv.slot[delta] = static_cast<std::int32_t>(lv.transversal.size());
          lv.transversal.push_back(lv.transversal[lv.slot[gamma]] * *s);
          lv.orbit.push_back(delta);
        }
      }
    }
  }

  static void schreier_sims(Data& d) {
    std::vector<Permutation> strong = d.gens;
    d.levels.clear();
    for (auto const& s : strong) {
      if (fixes_prefix(s, d.levels, d.levels.size())) {
        BsgsLevel lv;
        lv.base_point = first_moved(s);
        d.levels.push_back(std::move(lv));
      }
    }
    for (std::size_t i = 0; i < d.levels.size(); ++i) compute_level(d, strong, i);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(d.levels.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      std::vector<Permutation> si;
      for (auto const& s : strong) {
        if (fixes_prefix(s, d.levels, static_cast<std::size_t>(i))) si.push_back(s);
      }
      std::vector<point_t> const orbit = d.levels[i].orbit;
      for (point_t beta : orbit) {
        for (auto const& s : si) {
          auto const& lv = d.levels[i];
          Permutation h = lv.rep(beta) * s * lv.rep(s[beta]).inverse();
          if (h.is_identity()) continue;
          auto [res, j] = sift(d, std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == d.levels.size() && res.is_identity()) continue;
          if (j == d.levels.size()) {
            BsgsLevel lv2;
            lv2.base_point = first_moved(res);
            d.levels.push_back(std::move(lv2));
          }
          strong.push_back(std::move(res));
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            compute_level(d, strong, l);
          }
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
        if (restarted) break;
      }
      if (!restarted) --i;
    }

    std::uint64_t ord = 1;
    for (auto const& lv : d.levels) {
      std::uint64_t len = lv.orbit.size();
      if (ord > UINT64_MAX / len) {
        raise(ErrorKind::GroupTooLarge, "group order overflows 64 bits");
      }
      ord *= len;
    }
    d.order = ord;
  }

  static void enumerate(Data& d) {
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> all{Permutation::identity(d.degree)};
    seen.insert(all.front());
    for (std::size_t k = 0; k < all.size(); ++k) {
      for (auto const& g : d.gens) {
        Permutation z = all[k] * g;
        if (seen.insert(z).second) all.push_back(std::move(z));
      }
    }
    ensure(all.size() == d.order, "bsgs order == closure order",
           std::to_string(d.order) + " vs " + std::to_string(all.size()));
    std::sort(all.begin(), all.end());
    d.index.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) d.index.emplace(all[i], i);
    d.elements = std::move(all);
  }

  std::shared_ptr<Data const> d_;
};

//! Conjugacy classes in canonical order: by element order, then class size,
//! then lexicographically least representative.  The identity class is first.
struct ConjugacyClasses {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> element_orders;
  std::vector<std::uint32_t> class_index;  // by element index in G.elements()

  std::size_t count() const noexcept { return representatives.size(); }
};

inline ConjugacyClasses conjugacy_classes(PermGroup const& G) {
  auto const& el = G.elements();
  detail::UnionFind uf(el.size());
  std::vector<Permutation> ginv;
  for (auto const& g : G.generators()) ginv.push_back(g.inverse());
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t s = 0; s < ginv.size(); ++s) {
      uf.unite(i, G.require_index(ginv[s] * el[i] * G.generators()[s]));
    }
  }
  // elements are sorted, so each root (least index) is the least member
  std::vector<std::size_t> roots;
  std::unordered_map<std::size_t, std::size_t> root_slot;
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> of(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) {
    std::size_t r = uf.find(i);
    auto [it, fresh] = root_slot.emplace(r, roots.size());
    if (fresh) {
      roots.push_back(r);
      sizes.push_back(0);
    }
    ++sizes[it->second];
    of[i] = it->second;
  }
  std::vector<std::size_t> perm(roots.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint64_t> ords(roots.size());
  for (std::size_t c = 0; c < roots.size(); ++c) ords[c] = el[roots[c]].order();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (ords[a] != ords[b]) return ords[a] < ords[b];
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return roots[a] < roots[b];
  });
  std::vector<std::uint32_t> rank(roots.size());
  ConjugacyClasses cc;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    rank[perm[k]] = static_cast<std::uint32_t>(k);
    cc.representatives.push_back(el[roots[perm[k]]]);
    cc.sizes.push_back(sizes[perm[k]]);
    cc.element_orders.push_back(ords[perm[k]]);
  }
  cc.class_index.resize(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) cc.class_index[i] = rank[of[i]];
  return cc;
}

// ---------------------------------------------------------------------------
// Subgroup constructions
// ---------------------------------------------------------------------------

inline bool is_subgroup(PermGroup const& U, PermGroup const& G) {
  if (U.degree() != G.degree() || G.order() % U.order() != 0) return false;
  for (auto const& g : U.generators()) {
    if (!G.contains(g)) return false;
  }
  return true;
}

inline void require_subgroup(PermGroup const& U, PermGroup const& G,
                             std::string_view what) {
  if (!is_subgroup(U, G)) {
    raise(ErrorKind::NotASubgroup, std::string(what) + ": " + U.to_string() +
                                       " is not contained in " + G.to_string());
  }
}

inline bool is_normal(PermGroup const& N, PermGroup const& G) {
  if (!is_subgroup(N, G)) return false;
  for (auto const& g : G.generators()) {
    for (auto const& n : N.generators()) {
      if (!N.contains(n.conjugate_by(g))) return false;
    }
  }
  return true;
}

//! Subgroup of G generated by `gens`; NotASubgroup if a generator lies outside G.
inline PermGroup subgroup(PermGroup const& G, std::vector<Permutation> const& gens) {
  for (auto const& g : gens) {
    if (!G.contains(g)) {
      raise(ErrorKind::NotASubgroup, g.to_string() + " is not in " + G.to_string());
    }
  }
  return PermGroup::generated_by(G.degree(), gens);
}

inline PermGroup join(PermGroup const& A, PermGroup const& B) {
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return PermGroup::generated_by(A.degree(), gens);
}

inline PermGroup intersection(PermGroup const& A, PermGroup const& B) {
  PermGroup const& small = A.order() <= B.order() ? A : B;
  PermGroup const& big = A.order() <= B.order() ? B : A;
  std::vector<Permutation> keep;
  for (auto const& x : small.elements()) {
    if (big.contains(x)) keep.push_back(x);
  }
  return PermGroup::from_elements(A.degree(), std::move(keep));
}

inline PermGroup conjugate(PermGroup const& U, Permutation const& g) {
  std::vector<Permutation> gens;
  for (auto const& u : U.generators()) gens.push_back(u.conjugate_by(g));
  return PermGroup::generated_by(U.degree(), gens);
}

inline PermGroup centralizer(PermGroup const& G, Permutation const& x) {
  if (!G.contains(x)) {
    raise(ErrorKind::NotASubgroup, x.to_string() + " is not in " + G.to_string());
  }
  std::vector<Permutation> keep;
  for (auto const& g : G.elements()) {
    if (g * x == x * g) keep.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(keep));
}

//! Elements of G commuting with every element of U.
inline PermGroup centralizer(PermGroup const& G, PermGroup const& U) {
  std::vector<Permutation> keep;
  for (auto const& g : G.elements()) {
    bool ok = true;
    for (auto const& u : U.generators()) {
      if (g * u != u * g) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(keep));
}

inline PermGroup normalizer(PermGroup const& G, PermGroup const& U) {
  require_subgroup(U, G, "normalizer");
  std::vector<Permutation> keep;
  for (auto const& g : G.elements()) {
    bool ok = true;
    for (auto const& u : U.generators()) {
      if (!U.contains(u.conjugate_by(g))) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(keep));
}

//! Smallest normal subgroup of G containing `gens`.
inline PermGroup normal_closure(PermGroup const& G, std::vector<Permutation> gens) {
  PermGroup H = subgroup(G, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& g : G.generators()) {
      for (auto const& h : H.generators()) {
        Permutation c = h.conjugate_by(g);
        if (!H.contains(c)) {
          gens = H.generators();
          gens.push_back(std::move(c));
          H = PermGroup::generated_by(G.degree(), gens);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return H;
}

inline PermGroup derived_subgroup(PermGroup const& G) {
  std::vector<Permutation> comms;
  auto const& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  return normal_closure(G, std::move(comms));
}

//! Sylow p-subgroup by normalizer ascent: starting from the trivial group,
//! repeatedly adjoin the least element y of N_G(Q) \ Q with y^p in Q.
inline PermGroup sylow_subgroup(PermGroup const& G, std::uint64_t p) {
  std::uint64_t const target = detail::p_part(G.order(), p);
  PermGroup Q = PermGroup::trivial(G.degree());
  while (Q.order() < target) {
    PermGroup N = normalizer(G, Q);
    bool grew = false;
    for (auto const& y : N.elements()) {
      if (Q.contains(y) || !Q.contains(y.pow(static_cast<std::int64_t>(p)))) continue;
      std::vector<Permutation> gens = Q.generators();
      gens.push_back(y);
      Q = PermGroup::generated_by(G.degree(), gens);
      grew = true;
      break;
    }
    ensure(grew, "sylow ascent: p divides |N_G(Q):Q| for non-Sylow Q");
  }
  return Q;
}

inline bool is_p_group(PermGroup const& G, std::uint64_t p) {
  return detail::is_p_power(G.order(), p);
}

namespace detail {

//! Preimage in G of O_{p'}(G/X) (pprime = true) or O_p(G/X) (pprime = false),
//! for X normal in G.  An element x belongs to it iff the normal closure of x
//! modulo X is a p'-group (resp. p-group).
inline PermGroup upper_radical(PermGroup const& G, PermGroup const& X,
                               std::uint64_t p, bool pprime) {
  auto cc = conjugacy_classes(G);
  std::vector<Permutation> gens = X.generators();
  for (auto const& x : cc.representatives) {
    if (X.contains(x)) continue;
    std::vector<Permutation> seed = X.generators();
    seed.push_back(x);
    PermGroup M = normal_closure(G, seed);
    std::uint64_t idx = M.order() / X.order();
    bool ok = pprime ? (idx % p != 0) : is_p_power(idx, p);
    if (ok) gens.push_back(x);
  }
  return normal_closure(G, std::move(gens));
}

}  // namespace detail

//! True iff the series 1 <= O_p'(G) <= O_p'p(G) <= ... reaches G.
inline bool is_p_solvable(PermGroup const& G, std::uint64_t p) {
  PermGroup X = PermGroup::trivial(G.degree());
  while (true) {
    bool progress = false;
    for (bool pprime : {true, false}) {
      if (X.order() == G.order()) return true;
      PermGroup Y = detail::upper_radical(G, X, p, pprime);
      if (Y.order() > X.order()) progress = true;
      X = std::move(Y);
    }
    if (X.order() == G.order()) return true;
    if (!progress) return false;
  }
}

//! Intersection of all G-conjugates of U (the normal core).
inline PermGroup normal_core(PermGroup const& G, PermGroup const& U) {
  std::vector<Permutation> current = U.elements();
  for (auto const& g : G.elements()) {
    if (current.size() == 1) break;
    if (U.contains(g)) continue;
    PermGroup C = conjugate(U, g);
    std::vector<Permutation> keep;
    for (auto const& x : current) {
      if (C.contains(x)) keep.push_back(x);
    }
    current = std::move(keep);
  }
  return PermGroup::from_elements(G.degree(), std::move(current));
}

//! O_p(G): the core of a Sylow p-subgroup.
inline PermGroup core_p(PermGroup const& G, std::uint64_t p) {
  return normal_core(G, sylow_subgroup(G, p));
}

namespace detail {

inline std::vector<bool> membership_key(PermGroup const& G, PermGroup const& U) {
  std::vector<bool> key(G.order(), false);
  for (auto const& u : U.elements()) key[G.require_index(u)] = true;
  return key;
}

inline std::optional<PermGroup> hall_search(PermGroup const& G, PermGroup const& S,
                                            std::uint64_t target,
                                            std::vector<Permutation> const& cands,
                                            std::set<std::vector<bool>>& visited) {
  if (S.order() == target) return S;
  for (auto const& x : cands) {
    if (S.contains(x)) continue;
    std::vector<Permutation> gens = S.generators();
    gens.push_back(x);
    PermGroup T = PermGroup::generated_by(G.degree(), gens);
    if (target % T.order() != 0) continue;
    if (!visited.insert(membership_key(G, T)).second) continue;
    if (auto r = hall_search(G, T, target, cands, visited)) return r;
  }
  return std::nullopt;
}

}  // namespace detail

//! A Hall p'-subgroup (p-complement) of a p-solvable group, found by ordered
//! backtrack over subgroups generated by p'-elements in ascending order.
inline PermGroup hall_p_complement(PermGroup const& G, std::uint64_t p) {
  if (!is_p_solvable(G, p)) {
    raise(ErrorKind::NotPSolvable, G.to_string() + " is not " + std::to_string(p) + "-solvable");
  }
  std::uint64_t target = G.order() / detail::p_part(G.order(), p);
  PermGroup start = PermGroup::trivial(G.degree());
  if (target == 1) return start;
  std::vector<Permutation> cands;
  for (auto const& x : G.elements()) {
    if (!x.is_identity() && x.order() % p != 0) cands.push_back(x);
  }
  std::set<std::vector<bool>> visited;
  auto r = detail::hall_search(G, start, target, cands, visited);
  ensure(r.has_value(), "p-solvable groups have p-complements");
  return *r;
}

//! O_p'(G) as the core of a p-complement; requires p-solvability.
inline PermGroup core_pprime(PermGroup const& G, std::uint64_t p) {
  return normal_core(G, hall_p_complement(G, p));
}

//! O^{p'}(G): the normal closure of a Sylow p-subgroup.
inline PermGroup p_residual(PermGroup const& G, std::uint64_t p) {
  return normal_closure(G, sylow_subgroup(G, p).generators());
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

//! The projection G -> G/N realised as the action of G on right cosets of N.
//! Coset i is represented by its least element; coset 0 is N.
class Epimorphism {
 public:
  Epimorphism(PermGroup G, PermGroup N) : d_(std::make_shared<Data>()) {
    if (!is_normal(N, G)) {
      raise(ErrorKind::NotNormal, N.to_string() + " is not normal in " + G.to_string());
    }
    auto& d = *d_;
    d.source = std::move(G);
    d.kernel = std::move(N);
    auto const& el = d.source.elements();
    d.coset_of.assign(el.size(), UINT32_MAX);
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (d.coset_of[i] != UINT32_MAX) continue;
      auto c = static_cast<std::uint32_t>(d.reps.size());
      d.reps.push_back(el[i]);
      for (auto const& n : d.kernel.elements()) {
        d.coset_of[d.source.require_index(n * el[i])] = c;
      }
    }
    std::vector<Permutation> gens;
    for (auto const& g : d.source.generators()) gens.push_back(image(g));
    d.image = PermGroup::generated_by(d.reps.size(), gens);
  }

  PermGroup const& source() const noexcept { return d_->source; }
  PermGroup const& kernel() const noexcept { return d_->kernel; }
  PermGroup const& image_group() const noexcept { return d_->image; }

  std::size_t coset_of(Permutation const& g) const {
    return d_->coset_of[d_->source.require_index(g)];
  }

  Permutation image(Permutation const& g) const {
    std::vector<point_t> im(d_->reps.size());
    for (std::size_t c = 0; c < d_->reps.size(); ++c) {
      im[c] = static_cast<point_t>(coset_of(d_->reps[c] * g));
    }
    return Permutation::from_images(std::move(im));
  }

  //! Image of a subgroup U <= G.
  PermGroup image(PermGroup const& U) const {
    std::vector<Permutation> gens;
    for (auto const& u : U.generators()) gens.push_back(image(u));
    return PermGroup::generated_by(d_->reps.size(), gens);
  }

  //! Some g in G with image(g) == q (the least element of its coset).
  Permutation preimage(Permutation const& q) const {
    return d_->reps[q[0]];
  }

  //! Full preimage of a subgroup of the image.
  PermGroup preimage(PermGroup const& Qsub) const {
    std::vector<Permutation> gens = d_->kernel.generators();
    for (auto const& q : Qsub.generators()) gens.push_back(preimage(q));
    return PermGroup::generated_by(d_->source.degree(), gens);
  }

 private:
  struct Data {
    PermGroup source, kernel, image;
    std::vector<Permutation> reps;
    std::vector<std::uint32_t> coset_of;
  };
  std::shared_ptr<Data> d_;
};

struct Quotient {
  PermGroup group;
  Epimorphism projection;
};

inline Quotient quotient_group(PermGroup const& G, PermGroup const& N) {
  Epimorphism pi(G, N);
  return Quotient{pi.image_group(), pi};
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

//! Number of orbits on {0..n-1} of the group generated by the given maps.
inline std::size_t orbit_count(std::size_t n,
                               std::span<std::vector<std::size_t> const> generator_actions) {
  detail::UnionFind uf(n);
  for (auto const& act : generator_actions) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, act[x]);
  }
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (uf.find(x) == x) ++count;
  }
  return count;
}

//! Right cosets P'x of a normal subgroup D of P, as element-index classes.
//! Returns the number of orbits of A (acting by conjugation, A normalizing P
//! and D) on P/D.
inline std::size_t conjugation_orbits_on_quotient(PermGroup const& A, PermGroup const& P,
                                                  PermGroup const& D) {
  Epimorphism pi(P, D);
  std::size_t const n = pi.image_group().degree();
  std::vector<Permutation> reps(n);
  for (auto const& x : P.elements()) {
    std::size_t c = pi.coset_of(x);
    if (reps[c].degree() == 0) reps[c] = x;
  }
  std::vector<std::vector<std::size_t>> acts;
  for (auto const& a : A.generators()) {
    std::vector<std::size_t> act(n);
    for (std::size_t c = 0; c < n; ++c) act[c] = pi.coset_of(reps[c].conjugate_by(a));
    acts.push_back(std::move(act));
  }
  return orbit_count(n, acts);
}

}  // namespace mckay

#endif  // MCKAY_PERMGROUP_HPP_
