#ifndef MCKAY_MODULAR_HPP_
#define MCKAY_MODULAR_HPP_

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "permgroup.hpp"

// Arithmetic and linear algebra over F_l for small primes l (l < 2^32).

namespace mckay::modp {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

inline u64 mul(u64 a, u64 b, u64 l) { return (a * b) % l; }
inline u64 add(u64 a, u64 b, u64 l) { return (a + b) % l; }
inline u64 sub(u64 a, u64 b, u64 l) { return (a + l - b) % l; }

inline u64 pow(u64 a, u64 e, u64 l) {
  u64 r = 1 % l;
  a %= l;
  while (e) {
    if (e & 1u) r = mul(r, a, l);
    a = mul(a, a, l);
    e >>= 1u;
  }
  return r;
}

inline u64 inv(u64 a, u64 l) {
  ensure(a % l != 0, "modular inverse of zero");
  return pow(a, l - 2, l);
}

//! Least prime l with l == 1 (mod e) and l^2 > 4 * order.
inline u64 table_prime(u64 e, u64 order) {
  for (u64 l = e + 1;; l += e) {
    if (l * l > 4 * order && detail::is_prime(l)) {
      ensure(l < (u64{1} << 32), "table prime fits in 32 bits");
      return l;
    }
  }
}

inline u64 primitive_root(u64 l) {
  auto ps = detail::prime_divisors(l - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : ps) {
      if (pow(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

//! Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, u64 l) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t const cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    u64 iv = inv(m[r][c], l);
    for (auto& x : m[r]) x = mul(x, iv, l);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j], l), l);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

//! Basis of {x : m x = 0}.
inline Matrix nullspace(Matrix m, u64 l) {
  std::size_t const cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m, l);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, m[r][f], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

//! Characteristic polynomial det(xI - a), constant term first, via reduction
//! to upper Hessenberg form.
inline std::vector<u64> charpoly(Matrix h, u64 l) {
  std::size_t const n = h.size();
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 it = inv(h[m][m - 1], l);
    for (std::size_t r = m + 1; r < n; ++r) {
      u64 u = mul(h[r][m - 1], it, l);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[r][j] = sub(h[r][j], mul(u, h[m][j], l), l);
      for (std::size_t j = 0; j < n; ++j) h[j][m] = add(h[j][m], mul(u, h[j][r], l), l);
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] * prod h[j][j-1] * p_{i-1}
    std::vector<u64> pm(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      pm[k + 1] = add(pm[k + 1], p[m - 1][k], l);
      pm[k] = sub(pm[k], mul(h[m - 1][m - 1], p[m - 1][k], l), l);
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul(t, h[i][i - 1], l);
      u64 coef = mul(h[i - 1][m - 1], t, l);
      if (coef != 0) {
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) {
          pm[k] = sub(pm[k], mul(coef, p[i - 1][k], l), l);
        }
      }
    }
    p[m] = std::move(pm);
  }
  return p[n];
}

inline std::vector<u64> roots(std::vector<u64> const& poly, u64 l) {
  std::vector<u64> out;
  for (u64 x = 0; x < l; ++x) {
    u64 v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = add(mul(v, x, l), poly[k], l);
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace mckay::modp

#endif  // MCKAY_MODULAR_HPP_
