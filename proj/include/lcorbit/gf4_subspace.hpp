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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf2.hpp"
#include "lcorbit/gf4.hpp"

namespace lcorbit {

// Coordinate i of an F4 vector occupies bits 2i (coefficient of 1) and
// 2i+1 (coefficient of w).
inline BitVector expand_to_bits(const GF4Vector& v) {
  BitVector out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto b = v[i].bits();
    if (b & 1u) out.set(2 * i);
    if (b & 2u) out.set(2 * i + 1);
  }
  return out;
}

inline GF4Vector collapse_from_bits(const BitVector& bits) {
  GF4Vector out(bits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = GF4::from_bits(static_cast<std::uint8_t>(bits.get(2 * i) | (bits.get(2 * i + 1) << 1)));
  }
  return out;
}

// Binary span of F4^n vectors: {sum b_i g_i : b_i in {0,1}}. Dimensions are
// GF(2) dimensions throughout.
class GF4Subspace {
 public:
  GF4Subspace() = default;
  explicit GF4Subspace(std::size_t n) : n_(n), bits_(2 * n) {}

  static GF4Subspace span(std::size_t n, const std::vector<GF4Vector>& vectors) {
    GF4Subspace s(n);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return bits_.dim(); }

  bool insert(const GF4Vector& v) {
    check(v);
    return bits_.insert(expand_to_bits(v));
  }

  bool contains(const GF4Vector& v) const {
    check(v);
    return bits_.contains(expand_to_bits(v));
  }

  // Reduced echelon basis, rendered back into F4.
  std::vector<GF4Vector> basis() const {
    std::vector<GF4Vector> out;
    out.reserve(bits_.dim());
    for (const auto& row : bits_.basis()) out.push_back(collapse_from_bits(row));
    return out;
  }

  // All 2^dim elements; intended for small subspaces only.
  std::vector<GF4Vector> elements() const {
    const auto b = basis();
    if (b.size() >= 31) throw ResourceError("subspace element listing dimension", 30);
    std::vector<GF4Vector> out;
    const std::size_t count = std::size_t{1} << b.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      GF4Vector acc(n_);
      for (std::size_t k = 0; k < b.size(); ++k) {
        if ((mask >> k) & 1u) acc += b[k];
      }
      out.push_back(std::move(acc));
    }
    return out;
  }

  const BinSubspace& bits() const { return bits_; }

  friend GF4Subspace operator+(const GF4Subspace& a, const GF4Subspace& b) {
    a.check_ambient(b);
    GF4Subspace out(a.n_);
    out.bits_ = a.bits_ + b.bits_;
    return out;
  }

  friend GF4Subspace intersect(const GF4Subspace& a, const GF4Subspace& b) {
    a.check_ambient(b);
    GF4Subspace out(a.n_);
    out.bits_ = intersect(a.bits_, b.bits_);
    return out;
  }

  friend bool operator==(const GF4Subspace& a, const GF4Subspace& b) {
    return a.n_ == b.n_ && a.bits_.basis() == b.bits_.basis();
  }

 private:
  void check(const GF4Vector& v) const {
    if (v.size() != n_) {
      throw InputError("GF4 vector of length " + std::to_string(v.size()) +
                       " used with subspace of ambient length " + std::to_string(n_));
    }
  }
  void check_ambient(const GF4Subspace& other) const {
    if (other.n_ != n_) {
      throw InputError("GF4 subspace ambient length mismatch: " + std::to_string(n_) +
                       " vs " + std::to_string(other.n_));
    }
  }

  std::size_t n_ = 0;
  BinSubspace bits_;
};

}  // namespace lcorbit
