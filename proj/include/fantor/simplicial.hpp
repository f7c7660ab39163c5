#pragma once

// Abstract simplicial complexes with the empty face, their augmented chain
// complexes, links, reduced (co)homology with coefficients in a finitely
// generated abelian group, and Stanley–Reisner minimal non-faces.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"
#include "fantor/fan.hpp"

namespace fantor {

using Face = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  SimplicialComplex() : SimplicialComplex(0, {}) {}

  /// Closure of the given faces on vertices 0..vertex_count-1. Every vertex
  /// becomes a face, and the empty face is always present.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Face>& generating_faces,
                    std::vector<std::size_t> labels = {})
      : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t i = 0; i < vertex_count; ++i) labels_.push_back(i);
    std::set<Face> all{Face{}};
    for (std::size_t v = 0; v < vertex_count; ++v) all.insert(Face{v});
    for (auto f : generating_faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (auto v : f)
        if (v >= vertex_count) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
      const std::size_t k = f.size();
      if (k > 24) throw Error(Errc::DimensionMismatch, "face too large");
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Face s;
        for (std::size_t b = 0; b < k; ++b)
          if (mask & (std::size_t{1} << b)) s.push_back(f[b]);
        all.insert(std::move(s));
      }
    }
    std::size_t top = 0;
    for (const auto& f : all) top = std::max(top, f.size());
    by_size_.assign(top + 1, {});
    for (const auto& f : all) by_size_[f.size()].push_back(f);
    for (auto& level : by_size_) {
      std::sort(level.begin(), level.end());
      for (std::size_t i = 0; i < level.size(); ++i) index_[level[i]] = i;
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Original identity of each vertex (ray index for fan complexes, parent
  /// vertex for links).
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  /// −1 for the complex {∅}.
  int dimension() const noexcept { return static_cast<int>(by_size_.size()) - 2; }

  /// Faces of the given dimension, sorted; dimension −1 is {∅}.
  const std::vector<Face>& faces_of_dim(int d) const {
    static const std::vector<Face> none;
    if (d < -1 || d > dimension()) return none;
    return by_size_[static_cast<std::size_t>(d + 1)];
  }
  std::size_t face_count(int d) const { return faces_of_dim(d).size(); }

  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (const auto& level : by_size_) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

  bool contains(const Face& f) const { return index_.count(f) > 0; }
  std::size_t face_index(const Face& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) throw Error(Errc::FaceNotInComplex, index_set_to_string(f));
    return it->second;
  }

  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (const auto& f : faces()) {
      bool maximal = true;
      for (std::size_t v = 0; v < vertex_count_ && maximal; ++v) {
        if (std::binary_search(f.begin(), f.end(), v)) continue;
        Face g = f;
        g.insert(std::upper_bound(g.begin(), g.end(), v), v);
        if (contains(g)) maximal = false;
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  /// Every facet has the same dimension.
  bool is_pure() const {
    auto fs = facets();
    return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.size() == fs.front().size(); });
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_size_ == b.by_size_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<std::size_t> labels_;
  std::vector<std::vector<Face>> by_size_;
  std::map<Face, std::size_t> index_;
};

/// Vertices are the rays, faces the ray sets of the cones.
inline SimplicialComplex complex_of_fan(const Fan& fan) {
  return SimplicialComplex(fan.rays().size(), fan.max_cones());
}

/// {τ | τ ∩ σ = ∅, τ ∪ σ a face}, relabeled onto the vertices that occur in it.
inline SimplicialComplex link(const SimplicialComplex& cx, const Face& sigma) {
  if (!cx.contains(sigma)) throw Error(Errc::FaceNotInComplex, index_set_to_string(sigma));
  std::vector<Face> members;
  std::set<std::size_t> verts;
  for (const auto& f : cx.faces()) {
    if (!is_subset(sigma, f)) continue;
    Face rest = set_difference(f, sigma);
    verts.insert(rest.begin(), rest.end());
    members.push_back(std::move(rest));
  }
  std::vector<std::size_t> old(verts.begin(), verts.end());
  std::map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < old.size(); ++i) {
    relabel[old[i]] = i;
    labels.push_back(cx.labels()[old[i]]);
  }
  for (auto& f : members)
    for (auto& v : f) v = relabel.at(v);
  return SimplicialComplex(old.size(), members, labels);
}

/// Differentials of a chain complex of free groups: position k holds C_k and
/// boundaries[k] : C_k → C_{k-1}; boundaries[0] has no rows and the last
/// entry has no columns.
struct ChainComplexZ {
  std::vector<IntMatrix> boundaries;

  std::size_t length() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
  std::size_t group_rank(long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= length()) return 0;
    return boundaries[static_cast<std::size_t>(k)].cols();
  }
  /// boundaries[k], or the zero map when k is out of range.
  IntMatrix boundary(long k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < boundaries.size())
      return boundaries[static_cast<std::size_t>(k)];
    return IntMatrix(group_rank(k - 1), group_rank(k));
  }

  /// The dual cochain complex re-indexed as a chain complex: position k
  /// holds C^{length-1-k} and the maps are transposes.
  ChainComplexZ dual() const {
    ChainComplexZ d;
    const std::size_t len = length();
    for (std::size_t k = 0; k <= len; ++k) d.boundaries.push_back(boundaries[len - k].transpose());
    return d;
  }

  /// H_k(C ⊗ G). Free summands of G copy the integral answer; each Z/m
  /// summand uses the mapping cone of multiplication by m.
  AbelianGroupInv homology(long k, const AbelianGroupInv& g) const {
    AbelianGroupInv out = homology_at(boundary(k), boundary(k + 1)).power(g.free_rank);
    for (const auto& m : g.torsion) out += homology_mod(k, m);
    return out;
  }

 private:
  // Cone_k = C_{k-1} ⊕ C_k with D_k(a, b) = (−∂a, m·a + ∂b).
  IntMatrix cone_boundary(long k, const Integer& m) const {
    IntMatrix top = IntMatrix::hconcat(-boundary(k - 1), IntMatrix(group_rank(k - 2), group_rank(k)));
    IntMatrix mult(group_rank(k - 1), group_rank(k - 1));
    for (std::size_t i = 0; i < mult.rows(); ++i) mult(i, i) = m;
    IntMatrix bottom = IntMatrix::hconcat(mult, boundary(k));
    return IntMatrix::vconcat(top, bottom);
  }

  AbelianGroupInv homology_mod(long k, const Integer& m) const {
    return homology_at(cone_boundary(k, m), cone_boundary(k + 1, m));
  }
};

/// Augmented chain complex: position p holds the faces of dimension p−1, so
/// position 0 is the empty face; ∂σ = Σ_j (−1)^j σ_j in vertex order.
inline ChainComplexZ augmented_chain_complex(const SimplicialComplex& cx) {
  ChainComplexZ c;
  const int top = cx.dimension();
  c.boundaries.emplace_back(0, 1);
  for (int d = 0; d <= top; ++d) {
    const auto& faces = cx.faces_of_dim(d);
    const auto& lower = cx.faces_of_dim(d - 1);
    IntMatrix m(lower.size(), faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j)
      for (std::size_t k = 0; k < faces[j].size(); ++k) {
        Face sub = faces[j];
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        m(cx.face_index(sub), j) = (k % 2 == 0) ? 1 : -1;
      }
    c.boundaries.push_back(std::move(m));
  }
  c.boundaries.emplace_back(cx.face_count(top), 0);
  return c;
}

/// Reduced homology (or cohomology) with coefficients in g, indexed by degree
/// −1..dim (entry i+1 holds degree i).
inline std::vector<AbelianGroupInv> reduced_homology(const SimplicialComplex& cx,
                                                     const AbelianGroupInv& g,
                                                     bool cohomology = false) {
  ChainComplexZ chains = augmented_chain_complex(cx);
  const long len = static_cast<long>(chains.length());
  std::vector<AbelianGroupInv> out;
  if (!cohomology) {
    for (long p = 0; p < len; ++p) out.push_back(chains.homology(p, g));
  } else {
    ChainComplexZ co = chains.dual();
    for (long p = 0; p < len; ++p) out.push_back(co.homology(len - 1 - p, g));
  }
  return out;
}

inline std::vector<AbelianGroupInv> reduced_cohomology(const SimplicialComplex& cx,
                                                       const AbelianGroupInv& g) {
  return reduced_homology(cx, g, true);
}

/// Entry of a degree-indexed (−1..dim) list, zero outside the range.
inline AbelianGroupInv degree(const std::vector<AbelianGroupInv>& groups, long i) {
  if (i < -1 || i + 1 >= static_cast<long>(groups.size())) return {};
  return groups[static_cast<std::size_t>(i + 1)];
}

/// Inclusion-minimal vertex sets that are not faces.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx) {
  std::set<Face> out;
  for (const auto& f : cx.faces())
    for (std::size_t v = 0; v < cx.vertex_count(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (cx.contains(g)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < g.size() && minimal; ++k) {
        Face h = g;
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(k));
        minimal = cx.contains(h);
      }
      if (minimal) out.insert(g);
    }
  return {out.begin(), out.end()};
}

}  // namespace fantor
