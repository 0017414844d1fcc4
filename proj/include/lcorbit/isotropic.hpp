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

// Isotropic systems over F4, graphic presentations and Eulerian vectors.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf2.hpp"
#include "lcorbit/gf4.hpp"
#include "lcorbit/gf4_subspace.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

inline bool is_complete(const GF4Vector& v) {
  return std::none_of(v.entries().begin(), v.entries().end(), [](GF4 x) { return x.is_zero(); });
}

inline bool are_supplementary(const GF4Vector& v, const GF4Vector& w) {
  v.check_same_size(w, "supplementary test");
  if (!is_complete(v) || !is_complete(w)) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == w[i]) return false;
  }
  return true;
}

// A totally isotropic subspace of F4^n of binary dimension n.
class IsotropicSystem {
 public:
  // Validates self-orthogonality and dimension; throws ValidationError.
  static IsotropicSystem from_generators(std::size_t n, const std::vector<GF4Vector>& generators) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].size() != n) {
        throw ValidationError("generator " + std::to_string(i) + " has length " +
                              std::to_string(generators[i].size()) + ", expected " + std::to_string(n));
      }
      for (std::size_t j = i; j < generators.size(); ++j) {
        if (trace_inner(generators[i], generators[j])) {
          throw ValidationError("isotropy check failed: generators " + std::to_string(i) + " and " +
                                std::to_string(j) + " have nonzero trace inner product");
        }
      }
    }
    IsotropicSystem s;
    s.space_ = GF4Subspace::span(n, generators);
    if (s.space_.dim() != n) {
      throw ValidationError("dimension check failed: generators span binary dimension " +
                            std::to_string(s.space_.dim()) + ", expected " + std::to_string(n));
    }
    return s;
  }

  std::size_t size() const { return space_.ambient(); }
  const GF4Subspace& space() const { return space_; }
  std::vector<GF4Vector> basis() const { return space_.basis(); }
  bool contains(const GF4Vector& v) const { return space_.contains(v); }

  friend bool operator==(const IsotropicSystem&, const IsotropicSystem&) = default;

 private:
  GF4Subspace space_;
};

struct GraphicPresentation {
  LabelledGraph graph;
  GF4Vector v;
  GF4Vector w;
};

// Generators v[N_u] + w[{u}], one per vertex u.
inline std::vector<GF4Vector> presentation_generators(const GraphicPresentation& p) {
  const std::size_t n = p.graph.size();
  std::vector<GF4Vector> out;
  out.reserve(n);
  for (Vertex u = 0; u < n; ++u) {
    GF4Vector g = restrict_to(p.v, p.graph.neighbors(u));
    g[u] = g[u] + p.w[u];
    out.push_back(std::move(g));
  }
  return out;
}

inline IsotropicSystem from_graphic_presentation(const GraphicPresentation& p) {
  const std::size_t n = p.graph.size();
  if (p.v.size() != n || p.w.size() != n) {
    throw ValidationError("presentation vectors must have length " + std::to_string(n));
  }
  if (!is_complete(p.v)) throw ValidationError("presentation check failed: v is not complete");
  if (!is_complete(p.w)) throw ValidationError("presentation check failed: w is not complete");
  if (!are_supplementary(p.v, p.w)) {
    throw ValidationError("presentation check failed: v and w are not supplementary");
  }
  return IsotropicSystem::from_generators(n, presentation_generators(p));
}

// Graphic presentation with v = (w^2,...,w^2), w = (1,...,1). Its image
// under alpha is the stabilizer group of the graph state.
inline GraphicPresentation canonical_presentation(const LabelledGraph& g) {
  return {g, GF4Vector::constant(g.size(), GF4::omega2()), GF4Vector::constant(g.size(), GF4::one())};
}

inline IsotropicSystem canonical_system(const LabelledGraph& g) {
  return from_graphic_presentation(canonical_presentation(g));
}

// V_v = {v[X] : X subset of [n]} as a binary subspace.
inline GF4Subspace restriction_space(const GF4Vector& v) {
  GF4Subspace out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(restrict_to(v, std::array{i}));
  return out;
}

// r_S(v) = dim(V_v intersect S).
inline std::size_t rank(const IsotropicSystem& s, const GF4Vector& v) {
  if (v.size() != s.size()) {
    throw InputError("vector length " + std::to_string(v.size()) + " does not match system size " +
                     std::to_string(s.size()));
  }
  if (!is_complete(v)) throw InputError("rank is defined for complete vectors only, got " + v.to_string());
  return intersect(restriction_space(v), s.space()).dim();
}

inline bool is_eulerian_vector(const IsotropicSystem& s, const GF4Vector& v) {
  if (v.size() != s.size() || !is_complete(v)) return false;
  return rank(s, v) == 0;
}

inline constexpr std::size_t kDefaultEulerianCap = 13;

struct CountOptions {
  // Largest n for which the 3^n enumeration is attempted.
  std::size_t max_n = kDefaultEulerianCap;
  unsigned jobs = 1;
};

namespace detail {

// Enumerates complete vectors coordinate by coordinate. Each choice
// contributes one vector of the quotient F4^n / S (the residual of v_i at
// coordinate i after reduction by S); v is Eulerian iff the n residuals are
// independent. Dependent prefixes are pruned, so the count is exact.
class EulerianCounter {
 public:
  explicit EulerianCounter(const IsotropicSystem& s) : n_(s.size()) {
    if (2 * n_ > 64) throw ResourceError("Eulerian vector enumeration length", 32);
    for (const auto& row : s.space().bits().basis()) {
      rows_.push_back(row.words().empty() ? 0 : row.words()[0]);
      pivots_.push_back(row.lowest_set());
    }
    residual_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint64_t one = reduce(std::uint64_t{1} << (2 * i));
      const std::uint64_t omega = reduce(std::uint64_t{1} << (2 * i + 1));
      residual_[i] = {one, omega, one ^ omega};
    }
  }

  // Count with coordinates [0, depth0) fixed by `prefix` (values 0..2 for
  // 1, w, w^2).
  std::uint64_t count_with_prefix(const std::vector<int>& prefix) const {
    std::vector<std::uint64_t> echelon;
    std::vector<std::uint64_t> pivot_bits;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!push(echelon, pivot_bits, residual_[i][static_cast<std::size_t>(prefix[i])])) return 0;
    }
    return descend(prefix.size(), echelon, pivot_bits);
  }

  std::size_t size() const { return n_; }

 private:
  std::uint64_t reduce(std::uint64_t x) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if ((x >> pivots_[r]) & 1u) x ^= rows_[r];
    }
    return x;
  }

  static bool push(std::vector<std::uint64_t>& echelon, std::vector<std::uint64_t>& pivot_bits, std::uint64_t x) {
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (x & pivot_bits[k]) x ^= echelon[k];
    }
    if (x == 0) return false;
    echelon.push_back(x);
    pivot_bits.push_back(x & (~x + 1));
    return true;
  }

  std::uint64_t descend(std::size_t depth, std::vector<std::uint64_t>& echelon,
                        std::vector<std::uint64_t>& pivot_bits) const {
    if (depth == n_) return 1;
    std::uint64_t total = 0;
    for (const auto choice : residual_[depth]) {
      if (push(echelon, pivot_bits, choice)) {
        total += descend(depth + 1, echelon, pivot_bits);
        echelon.pop_back();
        pivot_bits.pop_back();
      }
    }
    return total;
  }

  std::size_t n_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::array<std::uint64_t, 3>> residual_;
};

// Runs `count(prefix)` over all 3^d prefixes, d = min(n, 4), split
// round-robin across `jobs` threads. Summation order does not affect the
// exact total.
template <typename CountPrefix>
std::uint64_t sum_over_prefixes(std::size_t n, unsigned jobs, const CountPrefix& count) {
  const std::size_t depth = std::min<std::size_t>(n, 4);
  std::size_t prefixes = 1;
  for (std::size_t i = 0; i < depth; ++i) prefixes *= 3;
  auto prefix_of = [depth](std::size_t index) {
    std::vector<int> p(depth);
    for (std::size_t i = 0; i < depth; ++i) {
      p[i] = static_cast<int>(index % 3);
      index /= 3;
    }
    return p;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(prefixes)));
  if (jobs == 1) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < prefixes; ++i) total += count(prefix_of(i));
    return total;
  }
  std::vector<std::uint64_t> partial(jobs, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < prefixes; i += jobs) partial[t] += count(prefix_of(i));
      });
    }
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace detail

// e(S): the number of Eulerian vectors, by exhaustive search over complete
// vectors.
inline std::uint64_t count_eulerian_vectors(const IsotropicSystem& s, const CountOptions& options = {}) {
  if (s.size() > options.max_n) throw ResourceError("Eulerian vector enumeration size", options.max_n);
  if (s.size() == 0) return 1;
  const detail::EulerianCounter counter(s);
  return detail::sum_over_prefixes(s.size(), options.jobs,
                                   [&counter](const std::vector<int>& prefix) {
                                     return counter.count_with_prefix(prefix);
                                   });
}

// e(G) = e(S_G).
inline std::uint64_t e_of_graph(const LabelledGraph& g, const CountOptions& options = {}) {
  return count_eulerian_vectors(canonical_system(g), options);
}

// All complete vectors of length n in lexicographic order of (1, w, w^2).
inline std::vector<GF4Vector> complete_vectors(std::size_t n) {
  if (n > 16) throw ResourceError("complete vector listing length", 16);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<GF4Vector> out;
  out.reserve(total);
  const auto nz = GF4::nonzero();
  for (std::size_t index = 0; index < total; ++index) {
    GF4Vector v(n);
    std::size_t rest = index;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = nz[rest % 3];
      rest /= 3;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lcorbit
