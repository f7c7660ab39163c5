#pragma once

// Regular rational fans stored simplicially: a lexicographically sorted ray
// table and the maximal cones as sorted ray-index sets. Every subset of a
// stored cone is a face.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fantor/cone.hpp"
#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"

namespace fantor {

using RaySet = std::vector<std::size_t>;

inline std::string vector_to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string index_set_to_string(const RaySet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline bool is_subset(const RaySet& small, const RaySet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline RaySet set_intersection(const RaySet& a, const RaySet& b) {
  RaySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline RaySet set_difference(const RaySet& a, const RaySet& b) {
  RaySet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Unvalidated fan description: rays and cones by index.
struct FanData {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  std::string name;
};

class Fan;
Fan validate_fan(const FanData& raw);

class Fan {
 public:
  std::size_t rank() const noexcept { return n_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<RaySet>& max_cones() const noexcept { return max_cones_; }
  /// All cones, sorted by dimension and then lexicographically; the zero
  /// cone comes first.
  const std::vector<RaySet>& cones() const noexcept { return cones_; }
  const std::string& name() const noexcept { return name_; }

  bool contains_cone(const RaySet& c) const { return index_.count(c) > 0; }
  std::size_t cone_index(const RaySet& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw Error(Errc::ConeNotInFan, index_set_to_string(c));
    return it->second;
  }

  std::vector<RaySet> cones_of_dim(std::size_t d) const {
    std::vector<RaySet> out;
    for (const auto& c : cones_)
      if (c.size() == d) out.push_back(c);
    return out;
  }

  /// Maximal cones having c as a face.
  std::vector<RaySet> maximal_cones_containing(const RaySet& c) const {
    std::vector<RaySet> out;
    for (const auto& m : max_cones_)
      if (is_subset(c, m)) out.push_back(m);
    return out;
  }

  std::vector<IntVector> generators(const RaySet& c) const {
    std::vector<IntVector> g;
    for (auto i : c) g.push_back(rays_.at(i));
    return g;
  }

  polyhedral::RationalCone as_rational_cone(const RaySet& c) const {
    return polyhedral::RationalCone::from_generators(n_, generators(c));
  }

  /// Cone whose rays are exactly the given vectors, if it is in the fan.
  RaySet cone_from_vectors(const std::vector<IntVector>& vs) const {
    RaySet c;
    for (const auto& v : vs) {
      auto it = std::find(rays_.begin(), rays_.end(), v);
      if (it == rays_.end()) throw Error(Errc::ConeNotInFan, "no ray " + vector_to_string(v));
      c.push_back(static_cast<std::size_t>(it - rays_.begin()));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!contains_cone(c)) throw Error(Errc::ConeNotInFan, describe(c));
    return c;
  }

  std::string describe(const RaySet& c) const {
    std::string s = "pos{";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += vector_to_string(rays_.at(c[i]));
    }
    return s + "}";
  }

  FanData data() const {
    FanData d;
    d.dim = n_;
    d.rays = rays_;
    for (const auto& m : max_cones_) d.cones.push_back(m);
    d.name = name_;
    return d;
  }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.n_ == b.n_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }

 private:
  friend Fan validate_fan(const FanData& raw);

  std::size_t n_ = 0;
  std::vector<IntVector> rays_;
  std::vector<RaySet> max_cones_;
  std::vector<RaySet> cones_;
  std::map<RaySet, std::size_t> index_;
  std::string name_;
};

inline Fan validate_fan(const FanData& raw) {
  const std::size_t n = raw.dim;
  for (std::size_t i = 0; i < raw.rays.size(); ++i) {
    const auto& r = raw.rays[i];
    if (r.size() != n)
      throw Error(Errc::DimensionMismatch, "ray " + std::to_string(i) + " has " +
                                               std::to_string(r.size()) + " coordinates, expected " +
                                               std::to_string(n));
    if (vector_gcd(r) != 1) throw Error(Errc::NonPrimitiveRay, "ray " + std::to_string(i) + " " + vector_to_string(r));
  }
  for (std::size_t i = 0; i < raw.rays.size(); ++i)
    for (std::size_t j = i + 1; j < raw.rays.size(); ++j)
      if (raw.rays[i] == raw.rays[j])
        throw Error(Errc::DuplicateRay, "rays " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are both " + vector_to_string(raw.rays[i]));

  std::set<std::size_t> used;
  for (std::size_t c = 0; c < raw.cones.size(); ++c)
    for (auto i : raw.cones[c]) {
      if (i >= raw.rays.size())
        throw Error(Errc::IndexOutOfRange, "cone " + std::to_string(c) + " uses ray index " +
                                               std::to_string(i) + " but there are " +
                                               std::to_string(raw.rays.size()) + " rays");
      used.insert(i);
    }

  // Sorted table of the rays actually used, and the old → new index map.
  std::vector<std::size_t> order(used.begin(), used.end());
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw.rays[a] < raw.rays[b]; });
  std::map<std::size_t, std::size_t> remap;
  Fan fan;
  fan.n_ = n;
  fan.name_ = raw.name;
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    fan.rays_.push_back(raw.rays[order[k]]);
  }

  std::set<RaySet> listed;
  for (const auto& c : raw.cones) {
    RaySet s;
    for (auto i : c) s.push_back(remap.at(i));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    listed.insert(s);
  }
  if (listed.empty()) listed.insert(RaySet{});

  for (const auto& c : listed) {
    auto gens = fan.generators(c);
    if (c.empty()) continue;
    IntMatrix m = IntMatrix::from_columns(gens, n);
    if (rank(m) != c.size()) throw Error(Errc::DependentGenerators, fan.describe(c));
    for (const auto& d : smith_normal_form(m).diagonal())
      if (d != 1) throw Error(Errc::NotRegular, fan.describe(c) + " has Smith diagonal entry " + d.str());
  }

  for (const auto& c : listed) {
    bool maximal = std::none_of(listed.begin(), listed.end(),
                                [&](const RaySet& o) { return o != c && is_subset(c, o); });
    if (maximal) fan.max_cones_.push_back(c);
  }

  const auto& mc = fan.max_cones_;
  for (std::size_t i = 0; i < mc.size(); ++i)
    for (std::size_t j = i + 1; j < mc.size(); ++j) {
      RaySet common = set_intersection(mc[i], mc[j]);
      auto meet = polyhedral::intersect(n, {fan.as_rational_cone(mc[i]), fan.as_rational_cone(mc[j])});
      if (!polyhedral::cones_equal(meet, fan.as_rational_cone(common)))
        throw Error(Errc::BadIntersection,
                    fan.describe(mc[i]) + " and " + fan.describe(mc[j]) + " meet outside their common face");
    }

  std::set<RaySet> all;
  for (const auto& m : mc) {
    const std::size_t k = m.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      RaySet f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) f.push_back(m[b]);
      all.insert(f);
    }
  }
  fan.cones_.assign(all.begin(), all.end());
  std::stable_sort(fan.cones_.begin(), fan.cones_.end(),
                   [](const RaySet& a, const RaySet& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < fan.cones_.size(); ++i) fan.index_[fan.cones_[i]] = i;
  return fan;
}

/// Replaces the star of sigma by the cones joining the ray through the sum of
/// sigma's generators to the faces of the star not containing sigma.
inline Fan star_subdivision(const Fan& fan, const RaySet& sigma) {
  if (!fan.contains_cone(sigma)) throw Error(Errc::ConeNotInFan, index_set_to_string(sigma));
  if (sigma.empty()) throw Error(Errc::DimensionTooSmall, "cannot subdivide at the zero cone");
  if (sigma.size() == 1) return fan;

  FanData d = fan.data();
  IntVector center(fan.rank());
  for (auto i : sigma)
    for (std::size_t k = 0; k < fan.rank(); ++k) center[k] += fan.rays()[i][k];
  const std::size_t rho = d.rays.size();
  d.rays.push_back(primitive(center));
  d.cones.clear();
  for (const auto& m : fan.max_cones()) {
    if (!is_subset(sigma, m)) {
      d.cones.push_back(m);
      continue;
    }
    for (auto v : sigma) {
      RaySet c;
      for (auto r : m)
        if (r != v) c.push_back(r);
      c.push_back(rho);
      d.cones.push_back(c);
    }
  }
  return validate_fan(d);
}

/// Surjection N → N/N_sigma ≅ Z^{n-d}: the last n-d rows of the unimodular
/// Hermite transform of sigma's generator matrix.
inline IntMatrix quotient_projection(const Fan& fan, const RaySet& sigma) {
  const std::size_t n = fan.rank();
  if (sigma.empty()) return IntMatrix::identity(n);
  IntMatrix m = IntMatrix::from_columns(fan.generators(sigma), n);
  HermiteForm h = hermite_normal_form(m);
  return h.u.row_range(sigma.size(), n);
}

/// Fan of the orbit closure of sigma: the star of sigma projected to the
/// quotient lattice.
inline Fan orbit_closure_fan(const Fan& fan, const RaySet& sigma) {
  if (!fan.contains_cone(sigma)) throw Error(Errc::ConeNotInFan, index_set_to_string(sigma));
  IntMatrix proj = quotient_projection(fan, sigma);
  FanData d;
  d.dim = fan.rank() - sigma.size();
  d.name = fan.name().empty() ? "" : fan.name() + "/orbit" + index_set_to_string(sigma);
  std::map<IntVector, std::size_t> ray_index;
  for (const auto& m : fan.maximal_cones_containing(sigma)) {
    std::vector<std::size_t> c;
    for (auto r : set_difference(m, sigma)) {
      IntVector image = primitive(proj * fan.rays()[r]);
      auto [it, inserted] = ray_index.emplace(image, d.rays.size());
      if (inserted) d.rays.push_back(image);
      c.push_back(it->second);
    }
    d.cones.push_back(std::move(c));
  }
  return validate_fan(d);
}

/// Full-dimensional maximal cones whose codimension-one faces each lie in
/// exactly two maximal cones.
inline bool is_complete(const Fan& fan) {
  const std::size_t n = fan.rank();
  if (fan.max_cones().empty()) return false;
  for (const auto& m : fan.max_cones())
    if (m.size() != n) return false;
  if (n == 0) return true;
  for (const auto& ridge : fan.cones_of_dim(n - 1))
    if (fan.maximal_cones_containing(ridge).size() != 2) return false;
  return true;
}

}  // namespace fantor
