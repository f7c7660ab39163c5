#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "fantor/exact_linalg.hpp"
#include "fantor/simplicial.hpp"

namespace oracle {

using fantor::AbelianGroupInv;
using fantor::Face;
using fantor::SimplicialComplex;

/// Boundary of the n-dimensional cross-polytope: vertices ±e_i at i and i+n,
/// facets pick one sign per coordinate. A sphere of dimension n-1.
inline SimplicialComplex cross_polytope_boundary(std::size_t n) {
  std::vector<Face> facets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Face f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(((mask >> i) & 1) ? i + n : i);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return SimplicialComplex(2 * n, facets);
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex projective_plane_6() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline SimplicialComplex random_complex(std::mt19937& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> nf(1, 7);
  std::uniform_int_distribution<std::size_t> sz(1, std::min<std::size_t>(n, 4));
  std::vector<Face> facets;
  const std::size_t count = nf(rng);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    Face f(vs.begin(), vs.begin() + sz(rng));
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return SimplicialComplex(n, facets);
}

/// Σ (−1)^k (number of k-faces), k from −1.
inline long reduced_euler_characteristic(const SimplicialComplex& cx) {
  long chi = 0;
  for (int d = -1; d <= cx.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(cx.face_count(d));
  return chi;
}

inline AbelianGroupInv torsion_part(const AbelianGroupInv& g) { return {0, g.torsion}; }
inline AbelianGroupInv free_part(const AbelianGroupInv& g) { return AbelianGroupInv::free(g.free_rank); }

/// H_k(X; G) from integral homology: H_k ⊗ G ⊕ Tor(H_{k−1}, G).
inline AbelianGroupInv uct_homology(const std::vector<AbelianGroupInv>& h, long k, const AbelianGroupInv& g) {
  auto t = fantor::tensor_and_tor1(fantor::degree(h, k), g).first;
  t += fantor::tensor_and_tor1(fantor::degree(h, k - 1), g).second;
  return t;
}

/// H^k(X; Z) from integral homology: free part of H_k ⊕ torsion of H_{k−1}.
inline AbelianGroupInv uct_cohomology(const std::vector<AbelianGroupInv>& h, long k) {
  auto c = free_part(fantor::degree(h, k));
  c += torsion_part(fantor::degree(h, k - 1));
  return c;
}

}  // namespace oracle
