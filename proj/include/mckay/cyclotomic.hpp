#ifndef MCKAY_CYCLOTOMIC_HPP_
#define MCKAY_CYCLOTOMIC_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace mckay {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(Rational const& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

//! Conductors above this bound raise ConductorOverflow.
inline std::uint32_t conductor_bound() { return 10000; }

namespace detail {

inline std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t r = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

//! Coefficients of the e-th cyclotomic polynomial, constant term first.
inline std::vector<std::int64_t> const& cyclotomic_polynomial(std::uint32_t e) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (std::uint32_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    auto const& den = cyclotomic_polynomial(d);  // monic
    std::size_t const dd = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      std::int64_t c = num[i];
      if (c == 0) continue;
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(e, std::move(num)).first->second;
}

//! Reduce a polynomial (constant term first) modulo Phi_e in place and
//! truncate to phi(e) coefficients.
inline void reduce_mod_cyclotomic(std::vector<Rational>& a, std::uint32_t e) {
  auto const& phi = cyclotomic_polynomial(e);
  std::size_t const deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) a[i - deg + j] -= c * phi[j];
    }
    a[i] = 0;
  }
  a.resize(deg);
}

}  // namespace detail

//! Exact element of Q(zeta_e), stored in the power basis of Q[x]/Phi_e(x)
//! where x is the primitive e-th root of unity zeta_e.  The roots are
//! compatible: zeta_{ek}^k == zeta_e.
//!
//! Conductors congruent to 2 mod 4 are halved and rational values are stored
//! with conductor 1, so the stored conductor is not necessarily minimal but
//! small in the common cases.
class Cyclotomic {
 public:
  Cyclotomic() : e_(1), c_{Rational(0)} {}
  Cyclotomic(Rational r) : e_(1), c_{std::move(r)} {}  // NOLINT
  Cyclotomic(long long n) : e_(1), c_{Rational(n)} {}  // NOLINT
  Cyclotomic(int n) : e_(1), c_{Rational(n)} {}        // NOLINT

  //! zeta_e^k
  static Cyclotomic root_of_unity(std::uint32_t e, std::int64_t k) {
    check_conductor(e);
    std::vector<Rational> pw(e, Rational(0));
    pw[static_cast<std::size_t>(((k % e) + e) % e)] = 1;
    return from_powers(e, std::move(pw));
  }

  //! sum_k a[k] zeta_e^k for k in 0..e-1 (entries past e wrap around).
  static Cyclotomic from_powers(std::uint32_t e, std::vector<Rational> a) {
    check_conductor(e);
    std::vector<Rational> folded(e, Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) folded[k % e] += a[k];
    detail::reduce_mod_cyclotomic(folded, e);
    Cyclotomic z;
    z.e_ = e;
    z.c_ = std::move(folded);
    z.normalize();
    return z;
  }

  std::uint32_t conductor() const noexcept { return e_; }
  std::vector<Rational> const& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (auto const& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return std::nullopt;
    }
    return c_[0];
  }

  //! Coefficients after embedding into Q(zeta_E); E must be a multiple of the
  //! conductor.
  std::vector<Rational> coefficients_at(std::uint32_t E) const {
    return coerce(E).c_;
  }

  //! Complex conjugation: zeta_e -> zeta_e^{e-1}.
  Cyclotomic conj() const {
    if (e_ == 1) return *this;
    std::vector<Rational> pw(e_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) pw[(e_ - i) % e_] += c_[i];
    return from_powers(e_, std::move(pw));
  }

  //! Galois automorphism zeta_e -> zeta_e^k (k coprime to e).
  Cyclotomic galois(std::int64_t k) const {
    if (e_ == 1) return *this;
    std::vector<Rational> pw(e_, Rational(0));
    auto kk = static_cast<std::size_t>(((k % e_) + e_) % e_);
    for (std::size_t i = 0; i < c_.size(); ++i) pw[(i * kk) % e_] += c_[i];
    return from_powers(e_, std::move(pw));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Cyclotomic operator+(Cyclotomic const& a, Cyclotomic const& b) {
    if (a.e_ == b.e_) {
      Cyclotomic r = a;
      for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
      r.normalize();
      return r;
    }
    std::uint32_t E = common(a.e_, b.e_);
    return a.coerce(E) + b.coerce(E);
  }

  friend Cyclotomic operator-(Cyclotomic const& a, Cyclotomic const& b) {
    return a + (-b);
  }

  friend Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b) {
    if (a.e_ == 1) return b.scaled(a.c_[0]);
    if (b.e_ == 1) return a.scaled(b.c_[0]);
    if (a.e_ != b.e_) {
      std::uint32_t E = common(a.e_, b.e_);
      return a.coerce(E) * b.coerce(E);
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    detail::reduce_mod_cyclotomic(prod, a.e_);
    Cyclotomic r;
    r.e_ = a.e_;
    r.c_ = std::move(prod);
    r.normalize();
    return r;
  }

  Cyclotomic& operator+=(Cyclotomic const& o) { return *this = *this + o; }
  Cyclotomic& operator-=(Cyclotomic const& o) { return *this = *this - o; }
  Cyclotomic& operator*=(Cyclotomic const& o) { return *this = *this * o; }

  Cyclotomic scaled(Rational const& s) const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
  }

  friend bool operator==(Cyclotomic const& a, Cyclotomic const& b) {
    if (a.e_ == b.e_) return a.c_ == b.c_;
    std::uint32_t E = common(a.e_, b.e_);
    return a.coerce(E).c_ == b.coerce(E).c_;
  }

  //! "a0 + a1*z(e)^1 + ..." with zero coefficients omitted; "0" for zero.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += mckay::to_string(c_[i]);
      if (i > 0) s += "*z(" + std::to_string(e_) + ")^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

  //! Inverse of to_string; accepts any exponent and mixed conductors.
  static Cyclotomic parse(std::string_view text) {
    std::string t;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    }
    if (t.empty()) raise(ErrorKind::BadFormat, "empty cyclotomic literal");
    Cyclotomic sum;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t next = t.find('+', pos);
      std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      sum += parse_term(term);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return sum;
  }

 private:
  static void check_conductor(std::uint64_t e) {
    if (e == 0 || e > conductor_bound()) {
      raise(ErrorKind::ConductorOverflow,
            "conductor " + std::to_string(e) + " outside 1.." +
                std::to_string(conductor_bound()));
    }
  }

  static std::uint32_t common(std::uint32_t a, std::uint32_t b) {
    std::uint64_t E = std::lcm<std::uint64_t>(a, b);
    check_conductor(E);
    return static_cast<std::uint32_t>(E);
  }

  Cyclotomic coerce(std::uint32_t E) const {
    if (E == e_) return *this;
    ensure(E % e_ == 0, "cyclotomic coercion to a multiple of the conductor");
    std::uint32_t m = E / e_;
    std::vector<Rational> pw(E, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) pw[(i * m) % E] += c_[i];
    detail::reduce_mod_cyclotomic(pw, E);
    Cyclotomic r;
    r.e_ = E;
    r.c_ = std::move(pw);
    return r;  // not normalized: callers compare coefficient vectors at E
  }

  void normalize() {
    if (e_ % 4 == 2) {
      // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
      std::uint32_t m = e_ / 2;
      std::vector<Rational> pw(m, Rational(0));
      for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t k = (i * ((m + 1) / 2)) % m;
        if (i % 2 == 0) pw[k] += c_[i];
        else pw[k] -= c_[i];
      }
      detail::reduce_mod_cyclotomic(pw, m);
      e_ = m;
      c_ = std::move(pw);
    }
    if (e_ != 1 && as_rational()) {
      c_.resize(1);
      e_ = 1;
    }
  }

  static Cyclotomic parse_term(std::string const& term) {
    try {
      auto star = term.find("z(");
      if (star == std::string::npos) return Cyclotomic(parse_rational(term));
      Rational coef(1);
      std::string head = term.substr(0, star);
      if (!head.empty()) {
        if (head == "-") coef = -1;
        else {
          if (head.back() != '*') raise(ErrorKind::BadFormat, "bad term '" + term + "'");
          head.pop_back();
          coef = parse_rational(head);
        }
      }
      auto close = term.find(')', star);
      if (close == std::string::npos) raise(ErrorKind::BadFormat, "bad term '" + term + "'");
      std::uint64_t e = std::stoull(term.substr(star + 2, close - star - 2));
      std::int64_t k = 1;
      if (close + 1 < term.size()) {
        if (term[close + 1] != '^') raise(ErrorKind::BadFormat, "bad term '" + term + "'");
        std::size_t used = 0;
        std::string ks = term.substr(close + 2);
        k = std::stoll(ks, &used);
        if (used != ks.size()) raise(ErrorKind::BadFormat, "bad exponent in '" + term + "'");
      }
      check_conductor(e);
      return root_of_unity(static_cast<std::uint32_t>(e), k).scaled(coef);
    } catch (std::invalid_argument const&) {
      raise(ErrorKind::BadFormat, "bad term '" + term + "'");
    } catch (std::out_of_range const&) {
      raise(ErrorKind::BadFormat, "bad term '" + term + "'");
    }
  }

  static Rational parse_rational(std::string const& s) {
    if (s.empty()) raise(ErrorKind::BadFormat, "empty rational");
    auto slash = s.find('/');
    auto digits = [&](std::string const& x) {
      std::size_t i = (!x.empty() && x[0] == '-') ? 1 : 0;
      if (i == x.size()) return false;
      for (; i < x.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
      }
      return true;
    };
    if (slash == std::string::npos) {
      if (!digits(s)) raise(ErrorKind::BadFormat, "bad rational '" + s + "'");
      return Rational(Integer(s));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!digits(a) || !digits(b) || b[0] == '-') raise(ErrorKind::BadFormat, "bad rational '" + s + "'");
    Integer den(b);
    if (den == 0) raise(ErrorKind::BadFormat, "zero denominator");
    return Rational(Integer(a), den);
  }

  std::uint32_t e_;
  std::vector<Rational> c_;
};

}  // namespace mckay

#endif  // MCKAY_CYCLOTOMIC_HPP_
