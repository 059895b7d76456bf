#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"

namespace hspecht {

/// Permutation of {1..n}, stored 0-based in one-line notation.
/// Composition follows functions: (a*b)(k) = a(b(k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

  /// From 1-based one-line notation.
  static Permutation from_one_line(const std::vector<int>& one_based) {
    Permutation p;
    p.img_.reserve(one_based.size());
    for (int v : one_based) p.img_.push_back(v - 1);
    p.validate();
    return p;
  }

  /// Transposition (i j), 1-based.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    Permutation p(n);
    if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("transposition index out of range");
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  /// Permutation of {1..n} acting as `cycle` (1-based), fixing the rest.
  static Permutation cycle(std::size_t n, const std::vector<int>& cyc) {
    Permutation p(n);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > n || static_cast<std::size_t>(to) > n)
        throw InvalidArgument("cycle entry out of range");
      p.img_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    p.validate();
    return p;
  }

  std::size_t size() const { return img_.size(); }

  /// Image of k (1-based in, 1-based out).
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)] + 1; }
  /// 0-based image.
  std::size_t at(std::size_t k) const { return static_cast<std::size_t>(img_[k]); }

  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] != static_cast<int>(k)) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Mismatch("composing permutations of different degree");
    Permutation c;
    c.img_.resize(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c.img_[k] = a.img_[static_cast<std::size_t>(b.img_[k])];
    return c;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) p.img_[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
    return p;
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (std::size_t k = 0; k < img_.size(); ++k) {
      if (seen[k]) continue;
      std::size_t len = 0;
      for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// Cycle notation without fixed points, e.g. `(1 2)(3 4)`; identity is `()`.
  std::string to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t k = 0; k < img_.size(); ++k) {
      if (seen[k] || img_[k] == static_cast<int>(k)) continue;
      any = true;
      os << "(";
      bool first = true;
      for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
        seen[j] = true;
        if (!first) os << " ";
        first = false;
        os << j + 1;
      }
      os << ")";
    }
    return any ? os.str() : std::string("()");
  }

  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  void validate() const {
    std::vector<bool> hit(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || hit[static_cast<std::size_t>(v)])
        throw InvalidArgument("not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> img_;
};

/// All permutations of {1..n} fixing everything outside `support`
/// (1-based labels), in lexicographic order of one-line notation.
inline std::vector<Permutation> permutations_of(std::size_t n, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  std::vector<Permutation> out;
  std::vector<int> images = support;
  do {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    for (std::size_t k = 0; k < support.size(); ++k) line[static_cast<std::size_t>(support[k] - 1)] = images[k];
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hspecht
