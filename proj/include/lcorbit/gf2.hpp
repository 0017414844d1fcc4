// Copyright 2026 The lcorbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense vectors and subspaces over GF(2).

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcorbit/errors.hpp"

namespace lcorbit {

class BitVector {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_(word_count(n), 0) {}

  static std::size_t word_count(std::size_t n) {
    return (n + kWordBits - 1) / kWordBits;
  }

  // Indicator vector of `indices` (the subset correspondence P -> ->P).
  template <typename Range>
  static BitVector indicator(std::size_t n, const Range& indices) {
    BitVector out(n);
    for (auto i : indices) out.set(static_cast<std::size_t>(i));
    return out;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) {
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  // Elementwise product, i.e. the indicator of the intersection.
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }
  bool none() const { return !any(); }

  // Standard dot product over GF(2).
  bool dot(const BitVector& other) const {
    check_same_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  // Index of the lowest set bit, or size() if the vector is zero.
  std::size_t lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return n_;
  }

  std::vector<std::size_t> set_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  // "0110..." with index 0 first.
  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check_same_size(const BitVector& other) const {
    if (other.n_ != n_) {
      throw InputError("bit vector length mismatch: " + std::to_string(n_) +
                       " vs " + std::to_string(other.n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (auto w : v.words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Subspace of GF(2)^n kept in fully reduced echelon form: every basis row has
// a distinct pivot (its lowest set bit), and no other row has that bit set.
class BinSubspace {
 public:
  BinSubspace() = default;
  explicit BinSubspace(std::size_t n) : n_(n) {}

  template <typename Range>
  static BinSubspace span(std::size_t n, const Range& vectors) {
    BinSubspace s(n);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  const std::vector<BitVector>& basis() const { return rows_; }

  // Residual of `v` after elimination against the basis. Zero iff v is in
  // the subspace.
  BitVector reduce(BitVector v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.get(pivots_[r])) v ^= rows_[r];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  // Adds v to the spanning set. Returns true if the dimension grew.
  bool insert(const BitVector& v) {
    BitVector residual = reduce(v);
    if (residual.none()) return false;
    const std::size_t pivot = residual.lowest_set();
    for (auto& row : rows_) {
      if (row.get(pivot)) row ^= residual;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(residual));
    return true;
  }

  // Number of elements is 2^dim; callers needing big counts use dim().
  friend BinSubspace operator+(const BinSubspace& a, const BinSubspace& b) {
    if (a.n_ != b.n_) throw InputError("subspace ambient length mismatch");
    BinSubspace out = a;
    for (const auto& row : b.rows_) out.insert(row);
    return out;
  }

  // Zassenhaus: reduce rows [a|a] and [b|0]; rows whose left half vanishes
  // carry a basis of the intersection in their right half.
  friend BinSubspace intersect(const BinSubspace& a, const BinSubspace& b) {
    if (a.n_ != b.n_) throw InputError("subspace ambient length mismatch");
    const std::size_t n = a.n_;
    // Right half first so that pivots land in the left half whenever it is
    // nonzero; the tail rows then have a zero left half.
    auto join = [n](const BitVector& left, const BitVector* right) {
      BitVector out(2 * n);
      for (auto i : left.set_indices()) out.set(n + i);
      if (right != nullptr) {
        for (auto i : right->set_indices()) out.set(i);
      }
      return out;
    };
    std::vector<BitVector> rows;
    for (const auto& r : a.rows_) rows.push_back(join(r, &r));
    for (const auto& r : b.rows_) rows.push_back(join(r, nullptr));
    // Plain Gaussian elimination, pivoting on the left half (high indices).
    std::vector<BitVector> echelon;
    std::vector<std::size_t> pivots;
    for (auto row : rows) {
      for (std::size_t k = 0; k < echelon.size(); ++k) {
        if (row.get(pivots[k])) row ^= echelon[k];
      }
      std::size_t pivot = 2 * n;
      for (std::size_t i = n; i < 2 * n; ++i) {
        if (row.get(i)) {
          pivot = i;
          break;
        }
      }
      if (pivot == 2 * n) {
        pivot = row.lowest_set();
        if (pivot == 2 * n) continue;
      }
      for (auto& e : echelon) {
        if (e.get(pivot)) e ^= row;
      }
      echelon.push_back(row);
      pivots.push_back(pivot);
    }
    BinSubspace out(n);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (pivots[k] >= n) continue;
      BitVector right(n);
      for (auto i : echelon[k].set_indices()) {
        if (i < n) right.set(i);
      }
      out.insert(right);
    }
    return out;
  }

  // Basis of {x : x . s = 0 for all s in this space}; dimension n - dim().
  BinSubspace orthogonal_complement() const {
    BinSubspace out(n_);
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t free = 0; free < n_; ++free) {
      if (is_pivot[free]) continue;
      BitVector x(n_);
      x.set(free);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].get(free)) x.set(pivots_[r]);
      }
      out.insert(x);
    }
    return out;
  }

 private:
  void check(const BitVector& v) const {
    if (v.size() != n_) {
      throw InputError("vector of length " + std::to_string(v.size()) +
                       " used with subspace of ambient length " + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lcorbit
