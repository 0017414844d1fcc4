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

// Dense statevector checks for graph states on a handful of qubits. Qubit i
// is bit i of the basis index.

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf4.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit::quantum {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 10;
inline constexpr double kTolerance = 1e-9;

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n) : n_(check_size(n)), amps_(std::size_t{1} << n_, Complex{0, 0}) {}

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  static std::size_t check_size(std::size_t n) {
    if (n > kMaxQubits) {
      throw ResourceError("statevector qubit count", kMaxQubits);
    }
    return n;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) throw InputError("inner product of states with different qubit counts");
  Complex s{0, 0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// True if a == e^{i phi} b for some phi, within `tol` per amplitude. The
// phase is fixed by the first amplitude of b with modulus above tol.
inline bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kTolerance) {
  if (a.qubits() != b.qubits()) return false;
  std::size_t pivot = b.dimension();
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (std::abs(b[i]) > tol) {
      pivot = i;
      break;
    }
  }
  if (pivot == b.dimension()) return a.norm() <= tol;
  if (std::abs(a[pivot]) <= tol) return false;
  const Complex phase = a[pivot] / b[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a[i] - phase * b[i]) > tol) return false;
  }
  return true;
}

inline bool approx_equal(const StateVector& a, const StateVector& b, double tol = kTolerance) {
  if (a.qubits() != b.qubits()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

// (-1)^(number of edges inside the support of x).
inline int edge_parity_sign(const LabelledGraph& g, std::uint64_t x) {
  std::size_t inside = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (!((x >> u) & 1u)) continue;
    const auto row = g.row_words(u);
    inside += static_cast<std::size_t>(std::popcount(row[0] & x));
  }
  // Each internal edge was counted from both ends.
  return (inside / 2) % 2 == 0 ? 1 : -1;
}

// |G> = prod_{(u,v) in E} C_Z^{(u,v)} |+>^n, in closed form.
inline StateVector graph_state(const LabelledGraph& g) {
  StateVector psi(g.size());
  const double amp = std::pow(2.0, -static_cast<double>(g.size()) / 2.0);
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) psi[x] = amp * edge_parity_sign(g, x);
  return psi;
}

// The same state built gate by gate: H on every qubit of |0...0>, then a
// controlled-Z per edge.
inline StateVector graph_state_by_gates(const LabelledGraph& g) {
  StateVector psi(g.size());
  const double amp = std::pow(2.0, -static_cast<double>(g.size()) / 2.0);
  for (std::size_t x = 0; x < psi.dimension(); ++x) psi[x] = amp;
  for (const auto& e : g.edges()) {
    const std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    for (std::size_t x = 0; x < psi.dimension(); ++x) {
      if ((x & mask) == mask) psi[x] = -psi[x];
    }
  }
  return psi;
}

// Applies a single-qubit 2x2 matrix m (row-major) to qubit q.
inline void apply_single(StateVector& psi, std::size_t q, const std::array<Complex, 4>& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t x = 0; x < psi.dimension(); ++x) {
    if (x & bit) continue;
    const Complex a0 = psi[x];
    const Complex a1 = psi[x | bit];
    psi[x] = m[0] * a0 + m[1] * a1;
    psi[x | bit] = m[2] * a0 + m[3] * a1;
  }
}

inline std::array<Complex, 4> pauli_matrix(Pauli p) {
  const Complex i{0, 1};
  switch (p) {
    case Pauli::I:
      return {1, 0, 0, 1};
    case Pauli::X:
      return {0, 1, 1, 0};
    case Pauli::Y:
      return {0, -i, i, 0};
    case Pauli::Z:
      return {1, 0, 0, -1};
  }
  return {1, 0, 0, 1};
}

inline StateVector apply_pauli(StateVector psi, const PauliString& p) {
  if (p.size() != psi.qubits()) throw InputError("Pauli string length does not match qubit count");
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (p[q] != Pauli::I) apply_single(psi, q, pauli_matrix(p[q]));
  }
  return psi;
}

// g_v = X_v prod_{u in N(v)} Z_u.
inline PauliString stabilizer_generator(const LabelledGraph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Pauli> letters(g.size(), Pauli::I);
  letters[v] = Pauli::X;
  for (Vertex u : g.neighbors(v)) letters[u] = Pauli::Z;
  return PauliString(std::move(letters));
}

// True iff every generator g_v fixes |G> (eigenvalue +1).
inline bool check_stabilizer(const LabelledGraph& g) {
  const StateVector psi = graph_state(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!approx_equal(apply_pauli(psi, stabilizer_generator(g, v)), psi)) return false;
  }
  return true;
}

// U_v = exp(-i pi/4 X_v) prod_{u in N(v)} exp(i pi/4 Z_u), applied to |psi>.
inline StateVector apply_lc_unitary(StateVector psi, const LabelledGraph& g, Vertex v) {
  g.check_vertex(v);
  if (psi.qubits() != g.size()) throw InputError("state and graph sizes differ");
  const double c = std::cos(std::numbers::pi / 4);
  const double s = std::sin(std::numbers::pi / 4);
  const Complex i{0, 1};
  const std::array<Complex, 4> rx{c, -i * s, -i * s, c};
  const std::array<Complex, 4> rz{std::exp(i * (std::numbers::pi / 4)), 0, 0, std::exp(-i * (std::numbers::pi / 4))};
  for (Vertex u : g.neighbors(v)) apply_single(psi, u, rz);
  apply_single(psi, v, rx);
  return psi;
}

inline StateVector apply_lc_unitary(const LabelledGraph& g, Vertex v) {
  return apply_lc_unitary(graph_state(g), g, v);
}

struct Overlap {
  // <G|G'> by direct inner product.
  Complex direct;
  // 2^{-n} sum_x (-1)^{|E(G + G') inside x|}.
  double via_symmetric_difference = 0;
};

inline Overlap overlap(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.size() != b.size()) {
    throw InputError("overlap needs graphs on the same vertex set (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
  StateVector::check_size(a.size());
  LabelledGraph sum(a.size());
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = u + 1; v < a.size(); ++v) {
      if (a.has_edge(u, v) != b.has_edge(u, v)) sum.add_edge(u, v);
    }
  }
  long long signed_total = 0;
  const std::uint64_t dim = std::uint64_t{1} << a.size();
  for (std::uint64_t x = 0; x < dim; ++x) signed_total += edge_parity_sign(sum, x);
  Overlap out;
  out.direct = inner_product(graph_state(a), graph_state(b));
  out.via_symmetric_difference = static_cast<double>(signed_total) / static_cast<double>(dim);
  return out;
}

// Dense matrix of a Pauli string (row-major, 2^n x 2^n), phase-free letters.
inline std::vector<Complex> pauli_string_matrix(const PauliString& p) {
  StateVector::check_size(p.size());
  const std::size_t dim = std::size_t{1} << p.size();
  std::vector<Complex> m(dim * dim, Complex{0, 0});
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector e(p.size());
    e[col] = 1;
    const StateVector out = apply_pauli(e, p);
    for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = out[row];
  }
  return m;
}

inline std::vector<Complex> matmul(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t dim) {
  std::vector<Complex> c(dim * dim, Complex{0, 0});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex aik = a[i * dim + k];
      if (aik == Complex{0, 0}) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
    }
  }
  return c;
}

// PQ == QP for the dense matrices.
inline bool matrices_commute(const PauliString& p, const PauliString& q) {
  const std::size_t dim = std::size_t{1} << p.size();
  const auto mp = pauli_string_matrix(p);
  const auto mq = pauli_string_matrix(q);
  const auto pq = matmul(mp, mq, dim);
  const auto qp = matmul(mq, mp, dim);
  for (std::size_t i = 0; i < pq.size(); ++i) {
    if (std::abs(pq[i] - qp[i]) > kTolerance) return false;
  }
  return true;
}

// Smallest k in Z_4 with A == i^k B, if any.
inline std::optional<int> phase_power_between(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const Complex i{0, 1};
  Complex phase{1, 0};
  for (int k = 0; k < 4; ++k, phase *= i) {
    bool ok = a.size() == b.size();
    for (std::size_t j = 0; ok && j < a.size(); ++j) ok = std::abs(a[j] - phase * b[j]) <= kTolerance;
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace lcorbit::quantum
