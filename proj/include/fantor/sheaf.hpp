#pragma once

// Sheaves of finitely generated abelian groups on the poset of cones of a
// fan, where σ ≤ τ iff τ is a face of σ and the open sets are the subfans.
// A sheaf is the same thing as its stalks and restriction maps
// F_σ → F_τ for τ ≺ σ.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"
#include "fantor/fan.hpp"
#include "fantor/simplicial.hpp"

namespace fantor {

/// Cones of a fan with the face relation precomputed; index order follows
/// Fan::cones(), so the zero cone is element 0.
class FanPoset {
 public:
  explicit FanPoset(const Fan& fan) : rank_(fan.rank()), cones_(fan.cones()) {
    for (std::size_t i = 0; i < cones_.size(); ++i) index_[cones_[i]] = i;
    faces_.resize(cones_.size());
    for (std::size_t i = 0; i < cones_.size(); ++i)
      for (std::size_t j = 0; j < cones_.size(); ++j)
        if (i != j && is_subset(cones_[j], cones_[i])) faces_[i].push_back(j);
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return cones_.size(); }
  const RaySet& cone(std::size_t i) const { return cones_.at(i); }
  std::size_t index(const RaySet& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw Error(Errc::ConeNotInFan, index_set_to_string(c));
    return it->second;
  }
  /// Proper faces of cone i.
  const std::vector<std::size_t>& proper_faces(std::size_t i) const { return faces_.at(i); }
  bool is_proper_face(std::size_t face, std::size_t of) const {
    const auto& f = faces_.at(of);
    return std::find(f.begin(), f.end(), face) != f.end();
  }

  /// Whether the set of cone indices is closed under taking faces.
  bool is_open(const std::vector<std::size_t>& u) const {
    std::set<std::size_t> s(u.begin(), u.end());
    for (auto i : s)
      for (auto j : faces_.at(i))
        if (!s.count(j)) return false;
    return true;
  }

  /// Inclusion-maximal members of u.
  std::vector<std::size_t> maximal_elements(const std::vector<std::size_t>& u) const {
    std::vector<std::size_t> out;
    for (auto i : u) {
      bool maximal = std::none_of(u.begin(), u.end(), [&](std::size_t j) { return is_proper_face(i, j); });
      if (maximal) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::size_t rank_;
  std::vector<RaySet> cones_;
  std::map<RaySet, std::size_t> index_;
  std::vector<std::vector<std::size_t>> faces_;
};

/// Stalks are given in their canonical presentation Z^r ⊕ Z/d1 ⊕ ...; the
/// restriction σ → τ is an integer matrix on those generators.
class PosetSheaf {
 public:
  PosetSheaf(FanPoset poset, std::vector<AbelianGroupInv> stalks,
             std::map<std::pair<std::size_t, std::size_t>, IntMatrix> restrictions)
      : poset_(std::move(poset)), stalks_(std::move(stalks)), res_(std::move(restrictions)) {
    if (stalks_.size() != poset_.size())
      throw Error(Errc::InvalidSheaf, "one stalk per cone required");
    for (std::size_t s = 0; s < poset_.size(); ++s)
      for (auto t : poset_.proper_faces(s)) {
        auto it = res_.find({s, t});
        if (it == res_.end())
          res_.emplace(std::make_pair(s, t), IntMatrix(gens(t), gens(s)));
        else if (it->second.rows() != gens(t) || it->second.cols() != gens(s))
          throw Error(Errc::InvalidSheaf, "restriction " + label(s, t) + " has the wrong shape");
      }
    check_well_defined();
    check_functorial();
  }

  static PosetSheaf zero(const Fan& fan) {
    FanPoset p(fan);
    std::vector<AbelianGroupInv> st(p.size());
    return PosetSheaf(std::move(p), std::move(st), {});
  }

  /// The constant sheaf G with identity restrictions.
  static PosetSheaf constant(const Fan& fan, const AbelianGroupInv& g) {
    FanPoset p(fan);
    std::vector<AbelianGroupInv> st(p.size(), g);
    std::map<std::pair<std::size_t, std::size_t>, IntMatrix> res;
    for (std::size_t s = 0; s < p.size(); ++s)
      for (auto t : p.proper_faces(s)) res.emplace(std::make_pair(s, t), IntMatrix::identity(g.generator_count()));
    return PosetSheaf(std::move(p), std::move(st), std::move(res));
  }

  /// G(σ): stalk G at sigma, zero elsewhere.
  static PosetSheaf simple(const Fan& fan, const RaySet& sigma, const AbelianGroupInv& g) {
    FanPoset p(fan);
    std::vector<AbelianGroupInv> st(p.size());
    st[p.index(sigma)] = g;
    return PosetSheaf(std::move(p), std::move(st), {});
  }

  const FanPoset& poset() const noexcept { return poset_; }
  const AbelianGroupInv& stalk(std::size_t i) const { return stalks_.at(i); }
  std::size_t gens(std::size_t i) const { return stalks_.at(i).generator_count(); }

  /// Restriction from cone s to cone t; identity when s == t.
  IntMatrix restriction(std::size_t s, std::size_t t) const {
    if (s == t) return IntMatrix::identity(gens(s));
    auto it = res_.find({s, t});
    if (it == res_.end()) throw Error(Errc::InvalidSheaf, label(s, t) + " is not a face relation");
    return it->second;
  }

  std::string label(std::size_t s, std::size_t t) const {
    return index_set_to_string(poset_.cone(s)) + "->" + index_set_to_string(poset_.cone(t));
  }

 private:
  static bool congruent(const Integer& a, const Integer& b, const Integer& order) {
    return order == 0 ? a == b : (a - b) % order == 0;
  }

  void check_well_defined() const {
    for (const auto& [key, m] : res_) {
      const auto src = stalks_[key.first].generator_orders();
      const auto dst = stalks_[key.second].generator_orders();
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (src[j] == 0) continue;
        for (std::size_t i = 0; i < dst.size(); ++i)
          if (!congruent(src[j] * m(i, j), 0, dst[i]))
            throw Error(Errc::InvalidSheaf, "restriction " + label(key.first, key.second) +
                                                " does not respect the torsion of the source");
      }
    }
  }

  void check_functorial() const {
    for (std::size_t s = 0; s < poset_.size(); ++s)
      for (auto t : poset_.proper_faces(s))
        for (auto u : poset_.proper_faces(t)) {
          IntMatrix composite = restriction(t, u) * restriction(s, t);
          IntMatrix direct = restriction(s, u);
          const auto orders = stalks_[u].generator_orders();
          for (std::size_t i = 0; i < composite.rows(); ++i)
            for (std::size_t j = 0; j < composite.cols(); ++j)
              if (!congruent(composite(i, j), direct(i, j), orders[i]))
                throw Error(Errc::InvalidSheaf, "restrictions through " + label(s, t) + " and " +
                                                    label(t, u) + " do not compose");
        }
  }

  FanPoset poset_;
  std::vector<AbelianGroupInv> stalks_;
  std::map<std::pair<std::size_t, std::size_t>, IntMatrix> res_;
};

namespace detail {

// Block-diagonal relation matrix of a list of stalks.
inline IntMatrix relations_of(const PosetSheaf& f, const std::vector<std::size_t>& cones) {
  IntMatrix r(0, 0);
  for (auto c : cones) r = IntMatrix::direct_sum(r, f.stalk(c).relation_matrix());
  return r;
}

inline std::size_t total_gens(const PosetSheaf& f, const std::vector<std::size_t>& cones) {
  std::size_t g = 0;
  for (auto c : cones) g += f.gens(c);
  return g;
}

// Lattice of compatible families over the maximal cones of an open set, in
// the coordinates of ⊕_{σ maximal} Z^{gens σ}.
struct SectionLattice {
  std::vector<std::size_t> maximal;
  IntMatrix basis;      // columns: a basis of the preimage lattice
  IntMatrix relations;  // columns: relations of ⊕ stalks, a sublattice of basis
};

inline SectionLattice section_lattice(const PosetSheaf& f, const std::vector<std::size_t>& open) {
  const FanPoset& p = f.poset();
  SectionLattice out;
  out.maximal = p.maximal_elements(open);
  const std::size_t cols = total_gens(f, out.maximal);
  std::vector<std::size_t> offset;
  for (std::size_t k = 0, o = 0; k < out.maximal.size(); o += f.gens(out.maximal[k]), ++k) offset.push_back(o);

  std::vector<std::size_t> meets;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < out.maximal.size(); ++a)
    for (std::size_t b = a + 1; b < out.maximal.size(); ++b) {
      pairs.emplace_back(a, b);
      meets.push_back(p.index(set_intersection(p.cone(out.maximal[a]), p.cone(out.maximal[b]))));
    }
  IntMatrix diff(total_gens(f, meets), cols);
  std::size_t row = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    const IntMatrix ra = f.restriction(out.maximal[a], meets[k]);
    const IntMatrix rb = f.restriction(out.maximal[b], meets[k]);
    for (std::size_t i = 0; i < ra.rows(); ++i) {
      for (std::size_t j = 0; j < ra.cols(); ++j) diff(row + i, offset[a] + j) += ra(i, j);
      for (std::size_t j = 0; j < rb.cols(); ++j) diff(row + i, offset[b] + j) -= rb(i, j);
    }
    row += ra.rows();
  }
  IntMatrix target_rel = relations_of(f, meets);
  out.basis = target_rel.is_zero() ? kernel_basis(diff) : preimage_lattice(diff, target_rel);
  out.relations = relations_of(f, out.maximal);
  return out;
}

}  // namespace detail

/// F(U) for an open (face-closed) set of cones U, as the equalizer over the
/// maximal cones of U and their pairwise intersections.
inline AbelianGroupInv sections(const PosetSheaf& f, const std::vector<RaySet>& open) {
  std::vector<std::size_t> u;
  for (const auto& c : open) u.push_back(f.poset().index(c));
  if (!f.poset().is_open(u)) throw Error(Errc::NotOpen, "the given cones are not closed under faces");
  if (u.empty()) return {};
  auto lat = detail::section_lattice(f, u);
  return subquotient(lat.basis, lat.relations);
}

inline AbelianGroupInv global_sections(const PosetSheaf& f) {
  std::vector<RaySet> all;
  for (std::size_t i = 0; i < f.poset().size(); ++i) all.push_back(f.poset().cone(i));
  return sections(f, all);
}

struct FlabbinessResult {
  bool flabby = true;
  std::optional<RaySet> offending_cone;
};

/// Flabby iff every stalk F_σ surjects onto the sections over the boundary
/// of σ (its proper faces).
inline FlabbinessResult is_flabby(const PosetSheaf& f) {
  const FanPoset& p = f.poset();
  for (std::size_t s = 0; s < p.size(); ++s) {
    const auto& boundary = p.proper_faces(s);
    if (boundary.empty()) continue;
    auto lat = detail::section_lattice(f, boundary);
    IntMatrix image(lat.basis.rows(), f.gens(s));
    std::size_t row = 0;
    for (auto m : lat.maximal) {
      IntMatrix r = f.restriction(s, m);
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) image(row + i, j) = r(i, j);
      row += r.rows();
    }
    if (!subquotient(lat.basis, IntMatrix::hconcat(image, lat.relations)).is_zero())
      return {false, p.cone(s)};
  }
  return {};
}

/// Sheaf cohomology H^0..H^rank via the cosimplicial complex of strict
/// chains x0 < ... < xp (each a proper face of the previous one) with
/// C^p = ⊕ F(xp).
inline std::vector<AbelianGroupInv> poset_sheaf_cohomology(const PosetSheaf& f) {
  const FanPoset& p = f.poset();
  const std::size_t top = p.rank();
  using Chain = std::vector<std::size_t>;

  // chains[q]: strict chains with q+1 elements whose last stalk is nonzero
  std::vector<std::vector<Chain>> chains(top + 2);
  std::vector<Chain> level;
  for (std::size_t i = 0; i < p.size(); ++i) level.push_back({i});
  for (std::size_t q = 0; q < top + 2 && !level.empty(); ++q) {
    std::vector<Chain> next;
    for (const auto& c : level) {
      if (f.gens(c.back()) > 0) chains[q].push_back(c);
      for (auto face : p.proper_faces(c.back())) {
        Chain d = c;
        d.push_back(face);
        next.push_back(std::move(d));
      }
    }
    level = std::move(next);
  }
  for (auto& cs : chains) std::sort(cs.begin(), cs.end());

  auto offsets = [&](std::size_t q) {
    std::map<Chain, std::size_t> o;
    std::size_t pos = 0;
    for (const auto& c : chains[q]) {
      o[c] = pos;
      pos += f.gens(c.back());
    }
    return std::make_pair(o, pos);
  };
  std::vector<std::map<Chain, std::size_t>> off(top + 2);
  std::vector<std::size_t> dim(top + 2);
  for (std::size_t q = 0; q < top + 2; ++q) std::tie(off[q], dim[q]) = offsets(q);

  auto relations = [&](std::size_t q) {
    IntMatrix r(0, 0);
    for (const auto& c : chains[q]) r = IntMatrix::direct_sum(r, f.stalk(c.back()).relation_matrix());
    return r;
  };

  // delta[q] : C^q → C^{q+1}
  std::vector<IntMatrix> delta;
  for (std::size_t q = 0; q + 1 < top + 2; ++q) {
    IntMatrix d(dim[q + 1], dim[q]);
    for (const auto& c : chains[q + 1]) {
      const std::size_t row = off[q + 1].at(c);
      for (std::size_t k = 0; k <= q + 1; ++k) {
        Chain shorter = c;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
        auto it = off[q].find(shorter);
        if (it == off[q].end()) continue;
        IntMatrix block = (k == q + 1) ? f.restriction(shorter.back(), c.back())
                                       : IntMatrix::identity(f.gens(c.back()));
        const Integer sign = (k % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < block.rows(); ++i)
          for (std::size_t j = 0; j < block.cols(); ++j)
            if (block(i, j) != 0) d(row + i, it->second + j) += sign * block(i, j);
      }
    }
    delta.push_back(std::move(d));
  }

  std::vector<AbelianGroupInv> out;
  for (std::size_t q = 0; q <= top; ++q) {
    IntMatrix out_map = delta[q];
    IntMatrix in_map = q == 0 ? IntMatrix(dim[0], 0) : delta[q - 1];
    IntMatrix rel_here = relations(q);
    IntMatrix rel_next = relations(q + 1);
    if (rel_here.is_zero() && rel_next.is_zero()) {
      out.push_back(homology_at(out_map, in_map));
      continue;
    }
    IntMatrix cycles = preimage_lattice(out_map, rel_next);
    out.push_back(subquotient(cycles, IntMatrix::hconcat(in_map, rel_here)));
  }
  return out;
}

/// H^i(Δ, G(σ)) for i = 0..rank: G in degree 0 when σ is maximal, and
/// H̃^{i-1} of the orbit-closure complex of σ otherwise.
inline std::vector<AbelianGroupInv> simple_sheaf_cohomology(const Fan& fan, const RaySet& sigma,
                                                            const AbelianGroupInv& g) {
  if (!fan.contains_cone(sigma)) throw Error(Errc::ConeNotInFan, index_set_to_string(sigma));
  const bool maximal = std::find(fan.max_cones().begin(), fan.max_cones().end(), sigma) != fan.max_cones().end();
  std::vector<AbelianGroupInv> out(fan.rank() + 1);
  out[0] = maximal ? g : AbelianGroupInv{};
  auto co = reduced_cohomology(complex_of_fan(orbit_closure_fan(fan, sigma)), g);
  for (std::size_t i = 1; i <= fan.rank(); ++i) out[i] = degree(co, static_cast<long>(i) - 1);
  return out;
}

}  // namespace fantor
