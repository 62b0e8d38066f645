#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hassett/error.hpp"
#include "hassett/subsets.hpp"

namespace hassett {

/// Bijection of {1..n} in one-line notation: image()[k-1] = sigma(k).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = degree();
    std::vector<bool> hit(image_.size(), false);
    for (int v : image_) {
      if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
        throw Error(ErrorCode::invalid_argument, "one-line image is not a bijection of 1..n");
      hit[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  static Permutation transposition(int n, int i, int j) {
    check_index(n, i);
    check_index(n, j);
    auto p = identity(n);
    std::swap(p.image_[static_cast<std::size_t>(i - 1)], p.image_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  /// Parses cycle notation such as "(1 3)(2 4)" or "(1,3)"; "" and "()" give
  /// the identity. Cycles are composed right to left.
  static Permutation parse_cycles(int n, std::string_view text) {
    auto result = identity(n);
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    std::vector<std::vector<int>> cycles;
    skip_space();
    while (pos < text.size()) {
      if (text[pos] != '(') throw Error(ErrorCode::syntax, "expected '(' in cycle notation");
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos >= text.size()) throw Error(ErrorCode::syntax, "unterminated cycle");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] < '0' || text[pos] > '9') throw Error(ErrorCode::syntax, "bad character in cycle");
        int v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + (text[pos++] - '0');
        check_index(n, v);
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
          throw Error(ErrorCode::syntax, "repeated point inside a cycle");
        cycle.push_back(v);
      }
      cycles.push_back(std::move(cycle));
      skip_space();
    }
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<int> c(static_cast<std::size_t>(n));
      std::iota(c.begin(), c.end(), 1);
      for (std::size_t k = 0; k < it->size(); ++k)
        c[static_cast<std::size_t>((*it)[k] - 1)] = (*it)[(k + 1) % it->size()];
      result = Permutation(std::move(c)) * result;
    }
    return result;
  }

  int degree() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }

  IndexSet apply(const IndexSet& set) const {
    IndexSet out;
    out.reserve(set.size());
    for (int i : set) out.push_back((*this)(i));
    std::sort(out.begin(), out.end());
    return out;
  }

  Mask apply(Mask m) const {
    Mask out = 0;
    for (int i = 0; m != 0; ++i, m >>= 1)
      if (m & 1U) out |= Mask{1} << (image_[static_cast<std::size_t>(i)] - 1);
    return out;
  }

  bool is_identity() const {
    for (int k = 0; k < degree(); ++k)
      if (image_[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
  }

  /// Composition: (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::shape_mismatch, "permutation degree mismatch");
    std::vector<int> image(b.image_.size());
    for (std::size_t k = 0; k < image.size(); ++k) image[k] = a(b.image_[k]);
    return Permutation(std::move(image));
  }

  /// Disjoint cycles, fixed points omitted, each cycle starting at its
  /// smallest point; "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> done(image_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
      if (done[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
      out += '(';
      int k = start;
      bool first = true;
      while (!done[static_cast<std::size_t>(k - 1)]) {
        done[static_cast<std::size_t>(k - 1)] = true;
        if (!first) out += ' ';
        out += std::to_string(k);
        first = false;
        k = (*this)(k);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace hassett
