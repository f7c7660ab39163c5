#pragma once

// Rational polyhedral cones with exact generator and inequality
// descriptions. Conversion between the two uses the double description
// method with the algebraic adjacency test, entirely over the integers.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"

namespace fantor::polyhedral {

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

/// Minimal generators of a cone: extreme rays modulo the lineality space and
/// a basis of the lineality space.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

namespace detail {

inline IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return primitive(std::move(out));
}

inline void dedupe(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace detail

/// Generators of {x ∈ Q^n | ⟨a, x⟩ ≥ 0 for every row a}.
inline ConeGenerators generators_from_inequalities(const std::vector<IntVector>& inequalities,
                                                   std::size_t n) {
  ConeGenerators g;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    g.lineality.push_back(std::move(e));
  }
  std::vector<IntVector> processed;

  for (const auto& raw : inequalities) {
    if (raw.size() != n) throw Error(Errc::RankMismatch, "inequality length differs from ambient rank");
    if (is_zero_vector(raw)) continue;
    const IntVector a = primitive(raw);

    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < g.lineality.size() && !pick; ++i)
      if (dot(a, g.lineality[i]) != 0) pick = i;

    if (pick) {
      IntVector l = g.lineality[*pick];
      Integer s = dot(a, l);
      if (s < 0) {
        l = negated(std::move(l));
        s = -s;
      }
      std::vector<IntVector> lin;
      for (std::size_t i = 0; i < g.lineality.size(); ++i) {
        if (i == *pick) continue;
        lin.push_back(detail::combine(s, g.lineality[i], -dot(a, g.lineality[i]), l));
      }
      std::vector<IntVector> rays;
      for (const auto& r : g.rays) rays.push_back(detail::combine(s, r, -dot(a, r), l));
      rays.push_back(l);
      g.lineality = std::move(lin);
      g.rays = std::move(rays);
    } else {
      std::vector<IntVector> pos, zero, neg;
      std::vector<Integer> pos_val, neg_val;
      for (const auto& r : g.rays) {
        Integer v = dot(a, r);
        if (v > 0) {
          pos.push_back(r);
          pos_val.push_back(v);
        } else if (v < 0) {
          neg.push_back(r);
          neg_val.push_back(v);
        } else {
          zero.push_back(r);
        }
      }
      // tight sets w.r.t. the inequalities processed so far
      auto tight = [&](const IntVector& r) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < processed.size(); ++i)
          if (dot(processed[i], r) == 0) t.push_back(i);
        return t;
      };
      std::vector<std::vector<std::size_t>> pos_tight, neg_tight;
      for (const auto& r : pos) pos_tight.push_back(tight(r));
      for (const auto& r : neg) neg_tight.push_back(tight(r));
      const std::size_t face_rank = n - g.lineality.size();  // need rank == face_rank - 2

      std::vector<IntVector> next = pos;
      next.insert(next.end(), zero.begin(), zero.end());
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) {
          std::vector<std::size_t> common;
          std::set_intersection(pos_tight[i].begin(), pos_tight[i].end(), neg_tight[j].begin(),
                                neg_tight[j].end(), std::back_inserter(common));
          if (face_rank < 2 || common.size() + 2 < face_rank) continue;
          std::vector<IntVector> rows;
          for (auto k : common) rows.push_back(processed[k]);
          if (rank_of_vectors(rows, n) != face_rank - 2) continue;
          next.push_back(detail::combine(pos_val[i], neg[j], -neg_val[j], pos[i]));
        }
      g.rays = std::move(next);
    }
    detail::dedupe(g.rays);
    processed.push_back(a);
  }
  return g;
}

/// A convex polyhedral cone in Q^n. Either description may be absent until
/// dual_description fills it in. Lineality generators and equalities are
/// stored as ± pairs.
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(std::size_t n, const std::vector<IntVector>& gens) {
    RationalCone c(n);
    std::vector<IntVector> g;
    for (const auto& v : gens) {
      if (v.size() != n) throw Error(Errc::RankMismatch, "generator length differs from ambient rank");
      if (!is_zero_vector(v)) g.push_back(primitive(v));
    }
    detail::dedupe(g);
    c.generators_ = std::move(g);
    return c;
  }

  static RationalCone from_inequalities(std::size_t n, const std::vector<IntVector>& ineqs) {
    RationalCone c(n);
    std::vector<IntVector> h;
    for (const auto& v : ineqs) {
      if (v.size() != n) throw Error(Errc::RankMismatch, "inequality length differs from ambient rank");
      if (!is_zero_vector(v)) h.push_back(primitive(v));
    }
    detail::dedupe(h);
    c.inequalities_ = std::move(h);
    return c;
  }

  static RationalCone full_space(std::size_t n) { return from_inequalities(n, {}); }

  /// pos(gens) + span(lin_gens).
  static RationalCone cone_plus_span(std::size_t n, const std::vector<IntVector>& gens,
                                     const std::vector<IntVector>& lin_gens) {
    std::vector<IntVector> all = gens;
    for (const auto& v : lin_gens) {
      all.push_back(v);
      all.push_back(negated(v));
    }
    return from_generators(n, all);
  }

  std::size_t ambient_rank() const noexcept { return n_; }
  bool has_generators() const noexcept { return generators_.has_value(); }
  bool has_inequalities() const noexcept { return inequalities_.has_value(); }
  const std::vector<IntVector>& generators() const { return generators_.value(); }
  const std::vector<IntVector>& inequalities() const { return inequalities_.value(); }

  friend RationalCone dual_description(const RationalCone& c);

 private:
  explicit RationalCone(std::size_t n) : n_(n) {}

  static std::vector<IntVector> flatten(const ConeGenerators& g) {
    std::vector<IntVector> out = g.rays;
    for (const auto& l : g.lineality) {
      out.push_back(l);
      out.push_back(negated(l));
    }
    detail::dedupe(out);
    return out;
  }

  std::size_t n_ = 0;
  std::optional<std::vector<IntVector>> generators_;
  std::optional<std::vector<IntVector>> inequalities_;
};

/// Populates whichever description is missing; with both present the
/// generators are replaced by the minimal ones derived from the inequalities.
inline RationalCone dual_description(const RationalCone& c) {
  if (!c.has_generators() && !c.has_inequalities())
    throw Error(Errc::DimensionMismatch, "cone has no description");
  RationalCone out(c.n_);
  std::vector<IntVector> ineqs;
  if (c.has_inequalities()) {
    ineqs = c.inequalities();
  } else {
    ineqs = RationalCone::flatten(generators_from_inequalities(c.generators(), c.n_));
  }
  // Regenerate from the irredundant inequality system so that both
  // descriptions are minimal.
  ConeGenerators gens = generators_from_inequalities(ineqs, c.n_);
  out.generators_ = RationalCone::flatten(gens);
  out.inequalities_ = RationalCone::flatten(generators_from_inequalities(*out.generators_, c.n_));
  return out;
}

inline const std::vector<IntVector>& ensure_inequalities(const RationalCone& c, RationalCone& scratch) {
  if (c.has_inequalities()) return c.inequalities();
  scratch = dual_description(c);
  return scratch.inequalities();
}

/// Intersection of cones in Q^n; the empty intersection is the full space.
inline RationalCone intersect(std::size_t n, const std::vector<RationalCone>& cones) {
  std::vector<IntVector> all;
  for (const auto& c : cones) {
    if (c.ambient_rank() != n)
      throw Error(Errc::RankMismatch, "cone of rank " + std::to_string(c.ambient_rank()) +
                                          " intersected in rank " + std::to_string(n));
    RationalCone scratch;
    const auto& h = ensure_inequalities(c, scratch);
    all.insert(all.end(), h.begin(), h.end());
  }
  return dual_description(RationalCone::from_inequalities(n, all));
}

inline bool is_full_dimensional(const RationalCone& c) {
  if (c.has_generators()) return rank_of_vectors(c.generators(), c.ambient_rank()) == c.ambient_rank();
  return is_full_dimensional(dual_description(c));
}

inline bool contains(const RationalCone& c, const IntVector& x) {
  RationalCone scratch;
  const auto& h = ensure_inequalities(c, scratch);
  return std::all_of(h.begin(), h.end(), [&](const IntVector& a) { return dot(a, x) >= 0; });
}

/// Canonical form: primitive rows of the reduced row echelon basis of the
/// lineality space, and the sorted primitive extreme rays reduced to vanish
/// on the pivot columns of that basis.
struct CanonicalCone {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
  friend bool operator==(const CanonicalCone&, const CanonicalCone&) = default;
};

inline std::vector<IntVector> row_echelon_basis(const std::vector<IntVector>& vs, std::size_t n,
                                                std::vector<std::size_t>* pivots_out = nullptr) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    Integer l = 1;
    for (const auto& x : m[i]) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
    IntVector v(n);
    for (std::size_t j = 0; j < n; ++j)
      v[j] = boost::multiprecision::numerator(m[i][j]) * (l / boost::multiprecision::denominator(m[i][j]));
    out.push_back(primitive(std::move(v)));
  }
  if (pivots_out) *pivots_out = pivots;
  return out;
}

inline CanonicalCone canonical_form(const RationalCone& c) {
  RationalCone full = c.has_generators() && c.has_inequalities() ? c : dual_description(c);
  ConeGenerators g = generators_from_inequalities(full.inequalities(), c.ambient_rank());
  CanonicalCone out;
  out.ambient_rank = c.ambient_rank();
  std::vector<std::size_t> pivots;
  out.lineality = row_echelon_basis(g.lineality, c.ambient_rank(), &pivots);
  for (auto r : g.rays) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const auto& row = out.lineality[i];
      const std::size_t pc = pivots[i];
      if (r[pc] == 0) continue;
      r = detail::combine(row[pc], r, -r[pc], row);
    }
    out.rays.push_back(primitive(std::move(r)));
  }
  detail::dedupe(out.rays);
  return out;
}

inline bool cones_equal(const RationalCone& a, const RationalCone& b) {
  return a.ambient_rank() == b.ambient_rank() && canonical_form(a) == canonical_form(b);
}

}  // namespace fantor::polyhedral
