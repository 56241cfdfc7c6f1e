#ifndef MCKAY_PERMUTATION_HPP_
#define MCKAY_PERMUTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mckay {

using point_t = std::uint32_t;

//! A permutation of {0, ..., degree-1}.  Points are 0-based internally and
//! 1-based in every textual form (cycle notation).
//!
//! Products act on the right: (a * b)[x] == b[a[x]], i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_t{0});
    return p;
  }

  //! Throws MalformedPermutation unless images is a bijection on 0..n-1.
  static Permutation from_images(std::vector<point_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (point_t x : images) {
      if (x >= images.size() || seen[x]) {
        raise(ErrorKind::MalformedPermutation,
              "image list is not a bijection on " +
                  std::to_string(images.size()) + " points");
      }
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  //! Product of the given 1-based cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<point_t>> const& cycles) {
    Permutation result = identity(degree);
    for (auto const& cyc : cycles) {
      Permutation c = identity(degree);
      std::vector<bool> used(degree, false);
      for (point_t x : cyc) {
        if (x < 1 || x > degree) {
          raise(ErrorKind::CycleOutOfRange,
                "point " + std::to_string(x) + " outside 1.." +
                    std::to_string(degree));
        }
        if (used[x - 1]) {
          raise(ErrorKind::MalformedPermutation,
                "point " + std::to_string(x) + " repeated inside a cycle");
        }
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        c.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
      }
      result = result * c;
    }
    return result;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<point_t const> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend Permutation operator*(Permutation const& a, Permutation const& b) {
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) {
      r.images_[i] = b.images_[a.images_[i]];
    }
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[images_[i]] = static_cast<point_t>(i);
    }
    return r;
  }

  Permutation pow(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k)
                            : static_cast<std::uint64_t>(k);
    Permutation acc = identity(degree());
    while (e != 0) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }

  //! h^-1 * this * h
  Permutation conjugate_by(Permutation const& h) const {
    return h.inverse() * *this * h;
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  //! Disjoint cycles, each starting at its least point, sorted by that point;
  //! fixed points omitted.  0-based.
  std::vector<std::vector<point_t>> cycles() const {
    std::vector<std::vector<point_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<point_t> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<point_t>(j));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  //! Canonical 1-based cycle notation, "()" for the identity.
  std::string to_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (auto const& c : cyc) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const& a, Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<point_t> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept {
    // FNV-1a over the image list
    std::uint64_t h = 1469598103934665603ull;
    for (point_t x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mckay

#endif  // MCKAY_PERMUTATION_HPP_
