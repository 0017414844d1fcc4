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

// The field F4 = {0, 1, w, w^2}, vectors over it, the trace inner product,
// and the phase-free map to Pauli strings.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lcorbit/errors.hpp"

namespace lcorbit {

// Each element is stored as its coordinates in the GF(2)-basis {1, w}:
// bit 0 is the coefficient of 1, bit 1 the coefficient of w. Addition is
// therefore XOR, and 1 + w = w^2 is 0b01 ^ 0b10 = 0b11.
class GF4 {
 public:
  constexpr GF4() = default;

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }
  static constexpr GF4 omega2() { return GF4(3); }

  static constexpr GF4 from_bits(std::uint8_t bits) { return GF4(bits & 3u); }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.bits_ ^ b.bits_); }
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }

  friend constexpr GF4 operator*(GF4 a, GF4 b) {
    if (a.is_zero() || b.is_zero()) return zero();
    // Nonzero elements are w^0, w^1, w^2 and multiply by adding exponents.
    const int e = (a.exponent() + b.exponent()) % 3;
    return from_exponent(e);
  }

  constexpr GF4 squared() const { return *this * *this; }

  friend constexpr bool operator==(GF4, GF4) = default;

  // '0', '1', 'w', 'W' (W = w^2).
  constexpr char symbol() const { return "01wW"[bits_]; }
  static GF4 from_symbol(char c) {
    switch (c) {
      case '0':
        return zero();
      case '1':
        return one();
      case 'w':
        return omega();
      case 'W':
        return omega2();
      default:
        throw ParseError(std::string("invalid GF4 symbol '") + c +
                         "' (expected one of 0 1 w W)");
    }
  }

  static constexpr std::array<GF4, 4> all() {
    return {zero(), one(), omega(), omega2()};
  }
  static constexpr std::array<GF4, 3> nonzero() {
    return {one(), omega(), omega2()};
  }

 private:
  constexpr explicit GF4(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {}

  constexpr int exponent() const { return bits_ == 1 ? 0 : (bits_ == 2 ? 1 : 2); }
  static constexpr GF4 from_exponent(int e) {
    return e == 0 ? one() : (e == 1 ? omega() : omega2());
  }

  std::uint8_t bits_ = 0;
};

// <a,b> = a*b^2 + a^2*b. Lands in {0,1}; it is 1 exactly when a and b are
// nonzero and distinct.
constexpr bool trace_inner(GF4 a, GF4 b) {
  const GF4 t = a * b.squared() + a.squared() * b;
  return t == GF4::one();
}

class GF4Vector {
 public:
  GF4Vector() = default;
  explicit GF4Vector(std::size_t n) : entries_(n) {}
  GF4Vector(std::initializer_list<GF4> entries) : entries_(entries) {}
  explicit GF4Vector(std::vector<GF4> entries) : entries_(std::move(entries)) {}

  static GF4Vector constant(std::size_t n, GF4 value) {
    return GF4Vector(std::vector<GF4>(n, value));
  }

  // Parses a word over {0,1,w,W}; whitespace is ignored.
  static GF4Vector parse(std::string_view text) {
    std::vector<GF4> out;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      out.push_back(GF4::from_symbol(c));
    }
    return GF4Vector(std::move(out));
  }

  std::size_t size() const { return entries_.size(); }
  GF4 operator[](std::size_t i) const { return entries_[i]; }
  GF4& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<GF4>& entries() const { return entries_; }

  GF4Vector& operator+=(const GF4Vector& other) {
    check_same_size(other, "addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] + other.entries_[i];
    return *this;
  }
  friend GF4Vector operator+(GF4Vector a, const GF4Vector& b) { return a += b; }

  bool is_zero() const {
    for (auto x : entries_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (auto x : entries_) s.push_back(x.symbol());
    return s;
  }

  friend bool operator==(const GF4Vector&, const GF4Vector&) = default;

  void check_same_size(const GF4Vector& other, const char* op) const {
    if (other.size() != size()) {
      throw InputError(std::string("GF4 vector length mismatch in ") + op + ": " +
                       std::to_string(size()) + " vs " + std::to_string(other.size()));
    }
  }

 private:
  std::vector<GF4> entries_;
};

// GF(2) sum of the coordinatewise trace inner products.
inline bool trace_inner(const GF4Vector& v, const GF4Vector& w) {
  v.check_same_size(w, "trace inner product");
  bool acc = false;
  for (std::size_t i = 0; i < v.size(); ++i) acc ^= trace_inner(v[i], w[i]);
  return acc;
}

// v[X]: entries of v on X, zero elsewhere. `members` lists X.
template <typename Range>
GF4Vector restrict_to(const GF4Vector& v, const Range& members) {
  GF4Vector out(v.size());
  for (auto i : members) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= v.size()) {
      throw InputError("restriction index " + std::to_string(idx) +
                       " out of range for length " + std::to_string(v.size()));
    }
    out[idx] = v[idx];
  }
  return out;
}

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr char pauli_letter(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

// alpha(0)=I, alpha(1)=X, alpha(w)=Y, alpha(w^2)=Z.
constexpr Pauli alpha(GF4 a) { return static_cast<Pauli>(a.bits()); }
constexpr GF4 alpha_inverse(Pauli p) { return GF4::from_bits(static_cast<std::uint8_t>(p)); }

// Tensor product of single-qubit Paulis, phase dropped.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : letters_(n, Pauli::I) {}
  explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

  static PauliString parse(std::string_view text) {
    std::vector<Pauli> out;
    for (char c : text) {
      switch (c) {
        case 'I':
          out.push_back(Pauli::I);
          break;
        case 'X':
          out.push_back(Pauli::X);
          break;
        case 'Y':
          out.push_back(Pauli::Y);
          break;
        case 'Z':
          out.push_back(Pauli::Z);
          break;
        default:
          throw ParseError(std::string("invalid Pauli letter '") + c + "'");
      }
    }
    return PauliString(std::move(out));
  }

  std::size_t size() const { return letters_.size(); }
  Pauli operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Pauli>& letters() const { return letters_; }

  std::string to_string() const {
    std::string s;
    for (auto p : letters_) s.push_back(pauli_letter(p));
    return s;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> letters_;
};

inline PauliString alpha(const GF4Vector& v) {
  std::vector<Pauli> letters;
  letters.reserve(v.size());
  for (auto x : v.entries()) letters.push_back(alpha(x));
  return PauliString(std::move(letters));
}

inline GF4Vector alpha_inverse(const PauliString& p) {
  std::vector<GF4> entries;
  entries.reserve(p.size());
  for (auto x : p.letters()) entries.push_back(alpha_inverse(x));
  return GF4Vector(std::move(entries));
}

// Two Pauli strings commute iff the trace inner product of their preimages
// vanishes.
inline bool pauli_commute(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw InputError("Pauli string length mismatch: " + std::to_string(p.size()) +
                     " vs " + std::to_string(q.size()));
  }
  return !trace_inner(alpha_inverse(p), alpha_inverse(q));
}

}  // namespace lcorbit
