#ifndef MCKAY_CHARTABLE_HPP_
#define MCKAY_CHARTABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "modular.hpp"
#include "permgroup.hpp"

namespace mckay {

class GroupContext;
using GroupRef = std::shared_ptr<GroupContext const>;
class ClassFunction;

//! Ordinary character table: one row per irreducible character, one column
//! per conjugacy class in the canonical class order.
//!
//! Rows are ordered by degree, then the trivial character, then
//! lexicographically on the value vectors (coefficients in Q(zeta_exponent)).
struct CharacterTable {
  std::vector<std::vector<Cyclotomic>> rows;
  std::uint64_t prime = 0;     // the prime l used for the modular computation
  std::uint32_t exponent = 1;  // exponent of the group

  std::size_t size() const noexcept { return rows.size(); }
};

namespace detail {
CharacterTable compute_character_table(GroupContext const& ctx);
}

//! A permutation group together with its conjugacy classes and (lazily) its
//! character table.  Shared and immutable; obtain through context().
class GroupContext : public std::enable_shared_from_this<GroupContext> {
 public:
  explicit GroupContext(PermGroup G)
      : group_(std::move(G)), classes_(conjugacy_classes(group_)) {
    auto const k = classes_.count();
    inverse_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      inverse_[i] = class_of(classes_.representatives[i].inverse());
    }
  }

  PermGroup const& group() const noexcept { return group_; }
  ConjugacyClasses const& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.count(); }
  std::uint64_t order() const noexcept { return group_.order(); }

  std::size_t class_of(Permutation const& g) const {
    return classes_.class_index[group_.require_index(g)];
  }

  std::size_t inverse_class(std::size_t i) const { return inverse_[i]; }

  //! Class of rep_i^t.
  std::size_t power_class(std::size_t i, std::int64_t t) const {
    return class_of(classes_.representatives[i].pow(t));
  }

  std::uint32_t exponent() const {
    std::uint64_t e = 1;
    for (auto o : classes_.element_orders) e = std::lcm(e, o);
    return static_cast<std::uint32_t>(e);
  }

  CharacterTable const& table() const {
    std::call_once(table_once_, [this] {
      table_ = std::make_unique<CharacterTable>(detail::compute_character_table(*this));
    });
    return *table_;
  }

  std::size_t irr_count() const { return table().size(); }
  ClassFunction irr(std::size_t i) const;
  ClassFunction trivial_character() const;

  GroupRef ref() const { return shared_from_this(); }

 private:
  PermGroup group_;
  ConjugacyClasses classes_;
  std::vector<std::size_t> inverse_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<CharacterTable> table_;
};

//! Returns the shared context for G, reusing an existing one when the same
//! group (as a set of permutations) was seen before.
inline GroupRef context(PermGroup const& G) {
  static std::mutex mu;
  static std::vector<GroupRef> registry;
  {
    std::lock_guard<std::mutex> lock(mu);
    for (auto const& c : registry) {
      if (c->group() == G) return c;
    }
  }
  auto fresh = std::make_shared<GroupContext const>(G);
  std::lock_guard<std::mutex> lock(mu);
  for (auto const& c : registry) {
    if (c->group() == G) return c;
  }
  registry.push_back(fresh);
  return fresh;
}

inline bool same_group(GroupRef const& a, GroupRef const& b) {
  return a == b || a->group() == b->group();
}

//! Class function on a group: one value per conjugacy class.  Characters,
//! generalized characters and arbitrary class functions share this type;
//! irreducibility is a checked property.
class ClassFunction {
 public:
  ClassFunction(GroupRef g, std::vector<Cyclotomic> values)
      : group_(std::move(g)), values_(std::move(values)) {
    ensure(values_.size() == group_->class_count(), "class function has one value per class");
  }

  GroupRef const& group() const noexcept { return group_; }
  std::vector<Cyclotomic> const& values() const& noexcept { return values_; }
  std::vector<Cyclotomic> values() && { return std::move(values_); }
  Cyclotomic const& operator[](std::size_t cls) const { return values_[cls]; }
  Cyclotomic const& at(Permutation const& g) const { return values_[group_->class_of(g)]; }

  Cyclotomic const& degree_value() const { return values_[0]; }

  //! Degree as an integer; AssertionFailure when the value at 1 is not one.
  std::uint64_t degree() const {
    auto r = values_[0].as_rational();
    ensure(r && denominator(*r) == 1 && *r >= 0, "degree is a nonnegative integer");
    return static_cast<std::uint64_t>(numerator(*r));
  }

  ClassFunction conj() const {
    std::vector<Cyclotomic> v;
    v.reserve(values_.size());
    for (auto const& x : values_) v.push_back(x.conj());
    return {group_, std::move(v)};
  }

  ClassFunction scaled(Rational const& s) const {
    std::vector<Cyclotomic> v;
    for (auto const& x : values_) v.push_back(x.scaled(s));
    return {group_, std::move(v)};
  }

  friend ClassFunction operator+(ClassFunction const& a, ClassFunction const& b) {
    check_same(a, b);
    std::vector<Cyclotomic> v;
    for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] + b.values_[i]);
    return {a.group_, std::move(v)};
  }

  friend ClassFunction operator-(ClassFunction const& a, ClassFunction const& b) {
    return a + b.scaled(-1);
  }

  friend bool operator==(ClassFunction const& a, ClassFunction const& b) {
    return same_group(a.group_, b.group_) && a.values_ == b.values_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ", ";
      s += values_[i].to_string();
    }
    return s + "]";
  }

  static void check_same(ClassFunction const& a, ClassFunction const& b) {
    if (!same_group(a.group_, b.group_)) {
      raise(ErrorKind::GroupMismatch, "class functions live on different groups");
    }
  }

 private:
  GroupRef group_;
  std::vector<Cyclotomic> values_;
};

inline ClassFunction GroupContext::irr(std::size_t i) const {
  return ClassFunction(ref(), table().rows.at(i));
}

inline ClassFunction GroupContext::trivial_character() const {
  return ClassFunction(ref(), std::vector<Cyclotomic>(class_count(), Cyclotomic(1)));
}

// ---------------------------------------------------------------------------
// Class-function calculus
// ---------------------------------------------------------------------------

//! Pointwise product.
inline ClassFunction tensor(ClassFunction const& a, ClassFunction const& b) {
  ClassFunction::check_same(a, b);
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.values().size(); ++i) v.push_back(a[i] * b[i]);
  return {a.group(), std::move(v)};
}

//! (1/|G|) sum_g a(g) conj(b(g)), as an element of the cyclotomic field.
inline Cyclotomic inner_product_value(ClassFunction const& a, ClassFunction const& b) {
  ClassFunction::check_same(a, b);
  auto const& ctx = *a.group();
  Cyclotomic sum;
  for (std::size_t i = 0; i < ctx.class_count(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    sum += (a[i] * b[i].conj()).scaled(Rational(ctx.classes().sizes[i]));
  }
  return sum.scaled(Rational(1, ctx.order()));
}

inline Rational inner_product(ClassFunction const& a, ClassFunction const& b) {
  auto v = inner_product_value(a, b);
  auto r = v.as_rational();
  ensure(r.has_value(), "inner product is rational", v.to_string());
  return *r;
}

//! Fusion map: class of U -> class of G containing it.
inline std::vector<std::size_t> fusion(GroupContext const& U, GroupContext const& G) {
  std::vector<std::size_t> f(U.class_count());
  for (std::size_t i = 0; i < U.class_count(); ++i) {
    f[i] = G.class_of(U.classes().representatives[i]);
  }
  return f;
}

inline ClassFunction restrict(ClassFunction const& chi, GroupRef const& U) {
  auto const& G = *chi.group();
  require_subgroup(U->group(), G.group(), "restrict");
  auto f = fusion(*U, G);
  std::vector<Cyclotomic> v;
  for (auto c : f) v.push_back(chi[c]);
  return {U, std::move(v)};
}

//! theta^G(g) = (|C_G(g)| / |U|) * sum over U-classes c fusing into [g] of |c| theta(c)
inline ClassFunction induce(ClassFunction const& theta, GroupRef const& G) {
  auto const& U = *theta.group();
  require_subgroup(U.group(), G->group(), "induce");
  auto f = fusion(U, *G);
  std::vector<Cyclotomic> v(G->class_count());
  for (std::size_t c = 0; c < U.class_count(); ++c) {
    v[f[c]] += theta[c].scaled(Rational(U.classes().sizes[c]));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t centralizer = G->order() / G->classes().sizes[i];
    v[i] = v[i].scaled(Rational(centralizer, U.order()));
  }
  return {G, std::move(v)};
}

//! theta^g(n) = theta(g n g^-1) for theta on a subgroup normalized by g.
inline ClassFunction conjugate_class_function(ClassFunction const& theta, Permutation const& g) {
  auto const& N = *theta.group();
  Permutation ginv = g.inverse();
  std::vector<Cyclotomic> v;
  for (auto const& n : N.classes().representatives) v.push_back(theta.at(g * n * ginv));
  return {theta.group(), std::move(v)};
}

//! Multiplicities [cf, chi_i] for every irreducible chi_i of the group.
inline std::vector<Rational> decompose(ClassFunction const& cf) {
  auto const& ctx = *cf.group();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < ctx.irr_count(); ++i) out.push_back(inner_product(cf, ctx.irr(i)));
  return out;
}

//! Irreducible constituents (indices into the table) of a character.
inline std::vector<std::size_t> constituents(ClassFunction const& cf) {
  auto m = decompose(cf);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) out.push_back(i);
  }
  return out;
}

//! A class function is a character iff all multiplicities are nonnegative
//! integers and it is nonzero.
inline bool is_character(ClassFunction const& cf) {
  bool nonzero = false;
  for (auto const& m : decompose(cf)) {
    if (m < 0 || denominator(m) != 1) return false;
    if (m != 0) nonzero = true;
  }
  return nonzero;
}

inline bool is_irreducible(ClassFunction const& cf) {
  return inner_product(cf, cf) == 1 && cf[0].as_rational() && *cf[0].as_rational() > 0;
}

//! Position of cf in its group's table, if it is an irreducible character.
inline std::optional<std::size_t> table_index(ClassFunction const& cf) {
  auto const& ctx = *cf.group();
  auto const& rows = ctx.table().rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == cf.values()) return i;
  }
  return std::nullopt;
}

inline std::size_t require_table_index(ClassFunction const& cf, std::string_view anchor) {
  auto i = table_index(cf);
  ensure(i.has_value(), anchor, "not an irreducible character: " + cf.to_string());
  return *i;
}

//! [chi_N, theta] != 0
inline bool lies_over(ClassFunction const& chi, ClassFunction const& theta) {
  return inner_product(restrict(chi, theta.group()), theta) != 0;
}

//! Pointwise k-th power (used for linear characters).
inline ClassFunction power(ClassFunction const& lambda, std::uint64_t k) {
  std::vector<Cyclotomic> v;
  for (auto const& x : lambda.values()) {
    Cyclotomic acc(1);
    for (std::uint64_t i = 0; i < k; ++i) acc *= x;
    v.push_back(std::move(acc));
  }
  return {lambda.group(), std::move(v)};
}

inline std::vector<std::size_t> irr_pprime(GroupContext const& ctx, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.irr_count(); ++i) {
    if (ctx.irr(i).degree() % p != 0) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> linear_characters(GroupContext const& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.irr_count(); ++i) {
    if (ctx.irr(i).degree() == 1) out.push_back(i);
  }
  return out;
}

//! Multiplicity of zeta_o^s (o = order of rep_i) as an eigenvalue of a
//! representation affording chi at rep_i, for s in 0..o-1.
inline std::vector<Rational> eigenvalue_multiplicities(ClassFunction const& chi, std::size_t i) {
  auto const& ctx = *chi.group();
  auto const o = static_cast<std::uint32_t>(ctx.classes().element_orders[i]);
  std::vector<Rational> m;
  for (std::uint32_t s = 0; s < o; ++s) {
    Cyclotomic acc;
    for (std::uint32_t t = 0; t < o; ++t) {
      acc += chi[ctx.power_class(i, t)] * Cyclotomic::root_of_unity(o, -static_cast<std::int64_t>(s) * t);
    }
    auto r = acc.scaled(Rational(1, o)).as_rational();
    ensure(r.has_value(), "eigenvalue multiplicity is rational");
    m.push_back(*r);
  }
  return m;
}

//! Multiplicative order of det(chi).
inline std::uint64_t det_order(ClassFunction const& chi) {
  auto const& ctx = *chi.group();
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < ctx.class_count(); ++i) {
    auto const o = ctx.classes().element_orders[i];
    auto m = eigenvalue_multiplicities(chi, i);
    Integer exp = 0;
    for (std::size_t s = 0; s < m.size(); ++s) {
      ensure(denominator(m[s]) == 1 && m[s] >= 0, "det_order needs a character");
      exp += numerator(m[s]) * s;
    }
    auto e = static_cast<std::uint64_t>(exp % o);
    ord = std::lcm(ord, o / std::gcd(o, e == 0 ? o : e));
  }
  return ord;
}

//! {g : chi(g) == chi(1)}
inline PermGroup kernel(ClassFunction const& chi) {
  auto const& ctx = *chi.group();
  auto const& G = ctx.group();
  std::vector<Permutation> keep;
  std::vector<bool> in_kernel(ctx.class_count());
  for (std::size_t i = 0; i < ctx.class_count(); ++i) in_kernel[i] = (chi[i] == chi[0]);
  for (auto const& g : G.elements()) {
    if (in_kernel[ctx.class_of(g)]) keep.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(keep));
}

//! Whether every element of N lies in the kernel of chi (checked on generators).
inline bool kernel_contains(ClassFunction const& chi, PermGroup const& N) {
  auto const& G = chi.group()->group();
  for (auto const& n : N.generators()) {
    if (!G.contains(n) || chi.at(n) != chi[0]) return false;
  }
  return true;
}

//! Character of U pulled back along the projection: value at u is
//! beta(pi(u)); beta lives on a subgroup of the image containing pi(U).
inline ClassFunction inflate(ClassFunction const& beta, Epimorphism const& pi, GroupRef const& U) {
  std::vector<Cyclotomic> v;
  for (auto const& u : U->classes().representatives) v.push_back(beta.at(pi.image(u)));
  return {U, std::move(v)};
}

inline ClassFunction inflate(ClassFunction const& beta, Epimorphism const& pi) {
  return inflate(beta, pi, context(pi.source()));
}

//! Inverse of inflate: chi lives on U >= ker(pi) with ker(pi) in its kernel;
//! the result lives on Ubar = pi(U).
inline ClassFunction deflate(ClassFunction const& chi, Epimorphism const& pi, GroupRef const& Ubar) {
  if (!kernel_contains(chi, pi.kernel())) {
    raise(ErrorKind::KernelViolation, "kernel of the projection is not in ker(chi)");
  }
  std::vector<Cyclotomic> v;
  for (auto const& q : Ubar->classes().representatives) v.push_back(chi.at(pi.preimage(q)));
  return {Ubar, std::move(v)};
}

inline ClassFunction deflate(ClassFunction const& chi, Epimorphism const& pi) {
  return deflate(chi, pi, context(pi.image(chi.group()->group())));
}

//! For G = NH with N normal: restriction Irr(G/N) -> Irr(H/(N cap H)) is a bijection.
//! Returns pairs (index in Irr(G), index in Irr(H)) for every chi in Irr(G)
//! with N in its kernel.
inline std::vector<std::pair<std::size_t, std::size_t>> restriction_bijection(GroupRef const& G,
                                                                              PermGroup const& N,
                                                                              GroupRef const& H) {
  auto const& g = G->group();
  if (!is_normal(N, g)) raise(ErrorKind::NotNormal, "restriction_bijection: N not normal in G");
  require_subgroup(H->group(), g, "restriction_bijection");
  PermGroup M = intersection(N, H->group());
  if (N.order() * H->order() / M.order() != g.order()) {
    raise(ErrorKind::FactorizationViolation, "G != NH");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<bool> hit(H->irr_count(), false);
  for (std::size_t i = 0; i < G->irr_count(); ++i) {
    auto chi = G->irr(i);
    if (!kernel_contains(chi, N)) continue;
    auto r = restrict(chi, H);
    auto j = table_index(r);
    ensure(j.has_value(), "restriction of Irr(G/N) to H is irreducible");
    ensure(kernel_contains(r, M), "restriction has N cap H in its kernel");
    ensure(!hit[*j], "restriction map is injective on Irr(G/N)");
    hit[*j] = true;
    out.emplace_back(i, *j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table computation (class algebra eigenvectors modulo l, lifted exactly)
// ---------------------------------------------------------------------------

namespace detail {

inline CharacterTable compute_character_table(GroupContext const& ctx) {
  using modp::u64;
  auto const& G = ctx.group();
  auto const& cc = ctx.classes();
  std::size_t const k = cc.count();
  if (k > 60) {
    raise(ErrorKind::GroupTooLarge, std::to_string(k) + " classes exceeds the table limit of 60");
  }
  u64 const order = G.order();
  u64 const e = ctx.exponent();
  u64 const l = modp::table_prime(e, order);
  u64 const z = modp::pow(modp::primitive_root(l), (l - 1) / e, l);

  // a[j][i][t] = #{(x, y) in C_j x C_i : x y = rep_t}
  std::vector<std::vector<std::vector<u64>>> a(
      k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  auto const& el = G.elements();
  std::vector<std::size_t> cls(el.size());
  std::vector<Permutation> invs(el.size());
  for (std::size_t x = 0; x < el.size(); ++x) {
    cls[x] = cc.class_index[x];
    invs[x] = el[x].inverse();
  }
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t x = 0; x < el.size(); ++x) {
      std::size_t y = ctx.class_of(invs[x] * cc.representatives[t]);
      ++a[cls[x]][y][t];
    }
  }

  // Split F_l^k into common eigenspaces of the class-multiplication matrices.
  std::vector<modp::Matrix> done;
  std::vector<modp::Matrix> pending;
  {
    modp::Matrix id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    (k == 1 ? done : pending).push_back(std::move(id));
  }
  for (std::size_t j = 1; j < k && !pending.empty(); ++j) {
    std::vector<modp::Matrix> next;
    for (auto& basis : pending) {
      auto pivots = modp::rref(basis, l);
      std::size_t const d = basis.size();
      // restricted matrix: column s of C holds the coordinates of A_j v_s
      modp::Matrix c(d, std::vector<u64>(d, 0));
      std::vector<std::vector<u64>> images(d, std::vector<u64>(k, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t i = 0; i < k; ++i) {
          u64 acc = 0;
          for (std::size_t t = 0; t < k; ++t) {
            if (a[j][i][t] && basis[s][t]) acc = (acc + (a[j][i][t] % l) * basis[s][t]) % l;
          }
          images[s][i] = acc;
        }
        for (std::size_t r = 0; r < d; ++r) c[r][s] = images[s][pivots[r]];
      }
      auto eig = modp::roots(modp::charpoly(c, l), l);
      ensure(!eig.empty(), "class matrix has an eigenvalue mod l");
      std::size_t covered = 0;
      for (u64 lambda : eig) {
        modp::Matrix shifted = c;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = modp::sub(shifted[r][r], lambda, l);
        auto ns = modp::nullspace(shifted, l);
        modp::Matrix sub;
        for (auto const& u : ns) {
          std::vector<u64> w(k, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (u[s] == 0) continue;
            for (std::size_t t = 0; t < k; ++t) w[t] = (w[t] + u[s] * basis[s][t]) % l;
          }
          sub.push_back(std::move(w));
        }
        covered += sub.size();
        (sub.size() == 1 ? done : next).push_back(std::move(sub));
      }
      ensure(covered == d, "class matrices are diagonalizable mod l");
    }
    pending = std::move(next);
  }
  ensure(pending.empty() && done.size() == k, "class algebra splits into k central characters");

  std::vector<std::size_t> ords(k);
  for (std::size_t i = 0; i < k; ++i) ords[i] = cc.element_orders[i];
  // power maps
  std::vector<std::vector<std::size_t>> powmap(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < ords[i]; ++t) powmap[i].push_back(ctx.power_class(i, t));
  }

  CharacterTable tab;
  tab.prime = l;
  tab.exponent = static_cast<std::uint32_t>(e);
  Integer degree_square_sum = 0;
  for (auto& sp : done) {
    std::vector<u64> w = sp[0];
    u64 w0inv = modp::inv(w[0], l);
    for (auto& x : w) x = modp::mul(x, w0inv, l);
    // chi(1)^2 = |G| / sum_i w_i w_{i'} / |C_i|
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      u64 term = modp::mul(w[i], w[ctx.inverse_class(i)], l);
      s = modp::add(s, modp::mul(term, modp::inv(cc.sizes[i] % l, l), l), l);
    }
    u64 d2 = modp::mul(order % l, modp::inv(s, l), l);
    u64 deg = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (modp::mul(d, d, l) == d2) {
        deg = d;
        break;
      }
    }
    ensure(deg != 0 && order % deg == 0, "degree recovered from central character");
    std::vector<u64> val(k);
    for (std::size_t i = 0; i < k; ++i) {
      val[i] = modp::mul(modp::mul(deg, w[i], l), modp::inv(cc.sizes[i] % l, l), l);
    }
    std::vector<Cyclotomic> row;
    for (std::size_t i = 0; i < k; ++i) {
      u64 const o = ords[i];
      u64 const zo = modp::pow(z, e / o, l);
      u64 const oinv = modp::inv(o % l, l);
      std::vector<Rational> mult(o);
      u64 total = 0;
      for (u64 sidx = 0; sidx < o; ++sidx) {
        u64 acc = 0;
        for (u64 t = 0; t < o; ++t) {
          u64 root = modp::pow(zo, (o - (sidx * t) % o) % o, l);
          acc = modp::add(acc, modp::mul(val[powmap[i][t]], root, l), l);
        }
        u64 m = modp::mul(acc, oinv, l);
        ensure(m <= deg, "eigenvalue multiplicity bounded by the degree");
        mult[sidx] = m;
        total += m;
      }
      ensure(total == deg, "eigenvalue multiplicities sum to the degree");
      row.push_back(Cyclotomic::from_powers(static_cast<std::uint32_t>(o), std::move(mult)));
    }
    degree_square_sum += Integer(deg) * deg;
    tab.rows.push_back(std::move(row));
  }
  ensure(degree_square_sum == Integer(order), "sum of squared degrees equals |G|");

  // canonical ordering
  auto const E = static_cast<std::uint32_t>(e);
  std::vector<std::vector<std::vector<Rational>>> keys;
  for (auto const& row : tab.rows) {
    std::vector<std::vector<Rational>> key;
    for (auto const& v : row) key.push_back(v.coefficients_at(E));
    keys.push_back(std::move(key));
  }
  std::vector<std::size_t> idx(tab.rows.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(tab.rows[r].begin(), tab.rows[r].end(),
                       [](Cyclotomic const& c) { return c == Cyclotomic(1); });
  };
  auto deg_of = [&](std::size_t r) { return *tab.rows[r][0].as_rational(); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (deg_of(x) != deg_of(y)) return deg_of(x) < deg_of(y);
    bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    return keys[x] < keys[y];
  });
  CharacterTable sorted;
  sorted.prime = tab.prime;
  sorted.exponent = tab.exponent;
  for (auto i : idx) sorted.rows.push_back(std::move(tab.rows[i]));
  return sorted;
}

}  // namespace detail

inline CharacterTable const& character_table(GroupRef const& G) { return G->table(); }

//! Line-oriented exact dump used by golden files:
//!   order <|G|>
//!   classes <k>
//!   class <i> order <o> size <s> rep <cycles>
//!   chi <j> : v_1 | v_2 | ...
inline std::string dump_table(GroupContext const& ctx) {
  std::ostringstream os;
  auto const& cc = ctx.classes();
  auto const& tab = ctx.table();
  os << "order " << ctx.order() << "\n";
  os << "classes " << cc.count() << "\n";
  for (std::size_t i = 0; i < cc.count(); ++i) {
    os << "class " << i << " order " << cc.element_orders[i] << " size " << cc.sizes[i] << " rep "
       << cc.representatives[i].to_string() << "\n";
  }
  for (std::size_t j = 0; j < tab.size(); ++j) {
    os << "chi " << j << " :";
    for (std::size_t i = 0; i < tab.rows[j].size(); ++i) {
      os << (i ? " | " : " ") << tab.rows[j][i].to_string();
    }
    os << "\n";
  }
  return os.str();
}

//! Aligned human-readable table.
inline std::string pretty_table(GroupContext const& ctx) {
  auto const& cc = ctx.classes();
  auto const& tab = ctx.table();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  std::vector<std::string> sizes{"size"};
  for (std::size_t i = 0; i < cc.count(); ++i) {
    head.push_back(std::to_string(cc.element_orders[i]) + std::string(1, static_cast<char>('a' + 0)));
    sizes.push_back(std::to_string(cc.sizes[i]));
  }
  // label classes as <order><letter> with letters per order
  std::size_t prev = 0;
  char letter = 'a';
  for (std::size_t i = 0; i < cc.count(); ++i) {
    if (i > 0 && cc.element_orders[i] == prev) ++letter;
    else letter = 'a';
    prev = cc.element_orders[i];
    head[i + 1] = std::to_string(cc.element_orders[i]) + letter;
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (std::size_t j = 0; j < tab.size(); ++j) {
    std::vector<std::string> row{"X." + std::to_string(j + 1)};
    for (auto const& v : tab.rows[j]) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (auto const& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (auto const& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << std::string(width[c] - r[c].size() + (c ? 2 : 0), ' ') << r[c];
    }
    os << "\n";
  }
  os << "(computed modulo l = " << tab.prime << ")\n";
  return os.str();
}

}  // namespace mckay

#endif  // MCKAY_CHARTABLE_HPP_
