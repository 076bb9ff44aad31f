#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// Permutation of {0, ..., degree-1} stored as an image array.
// Cycle notation at the API boundary is 1-based; internal points are 0-based.
// Permutations are totally ordered lexicographically by image array, which
// makes the identity the minimum element of any group.
class Perm {
public:
  Perm() = default;

  explicit Perm(int degree) : img_(static_cast<size_t>(degree)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw validity_error("image array is not a permutation");
      seen[v] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (a*b)(x) = a(b(x)): b acts first.
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img_.resize(a.img_.size());
    for (size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
  }

  int order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
      p = p * (*this);
      ++n;
    }
    return n;
  }

  auto operator<=>(const Perm&) const = default;

  // Builds the product of the listed cycles; the leftmost cycle acts first.
  // Points are 1-based.  A point repeated inside one cycle is invalid.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm r(degree);
    for (const auto& cyc : cycles) {
      Perm c(degree);
      std::vector<char> used(static_cast<size_t>(degree), 0);
      for (int p : cyc) {
        if (p < 1 || p > degree) throw validity_error("cycle point out of range");
        if (used[p - 1]) throw validity_error("repeated point in a cycle");
        used[p - 1] = 1;
      }
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1;
        int to = cyc[(i + 1) % cyc.size()] - 1;
        c.img_[from] = to;
      }
      r = c * r;  // later cycles act after earlier ones
    }
    return r;
  }

  // 1-based cycle notation, fixed points suppressed; identity prints "(1)".
  std::string cycle_string() const {
    std::string out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        seen[j] = 1;
        j = img_[j];
        first = false;
      } while (j != i);
      out += ')';
    }
    if (out.empty()) out = "(1)";
    return out;
  }

private:
  std::vector<int> img_;
};

}  // namespace burnside
