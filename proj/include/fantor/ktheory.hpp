#pragma once

// Flatness of equivariant K_0 over the representation ring, the Tor groups
// Tor_p^{RT}(K_q^T(X), Z) of a smooth toric variety expressed through the
// reduced cohomology of its fan complex, the E1 page of the filtration
// spectral sequence, and the change of Tor under star subdivision.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"
#include "fantor/fan.hpp"
#include "fantor/simplicial.hpp"

namespace fantor {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Ranks of Tor_i^{RT}(RT_σ, Z) for a cone of dimension d in rank n: the
/// Koszul complex on the n−d coordinates of σ^⊥ gives C(n−d, i).
inline std::vector<std::size_t> koszul_tor_ranks(std::size_t n, std::size_t d) {
  if (d > n) throw Error(Errc::DimensionMismatch, "cone dimension exceeds ambient rank");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n - d; ++i) out.push_back(binomial(n - d, i));
  return out;
}

/// A reduced homology group H̃_i(lk σ, Z) that is nonzero below the top
/// degree of the link.
struct LinkDefect {
  Face face;  // ray indices; empty for the whole complex
  long degree = 0;
  AbelianGroupInv group;
};

struct FlatnessReport {
  bool pure = false;
  bool link_conditions_ok = false;
  std::vector<LinkDefect> link_offenders;
  bool global_ok = false;
  std::vector<LinkDefect> global_offenders;
  bool flat = false;
  bool merkurjev_degenerates = false;
};

namespace detail {

inline std::vector<LinkDefect> low_degree_homology(const SimplicialComplex& cx, const Face& label) {
  std::vector<LinkDefect> out;
  auto h = reduced_homology(cx, AbelianGroupInv::free(1));
  for (long i = -1; i < cx.dimension(); ++i) {
    auto g = degree(h, i);
    if (!g.is_zero()) out.push_back({label, i, g});
  }
  return out;
}

inline std::vector<LinkDefect> link_defects(const SimplicialComplex& cx) {
  std::vector<LinkDefect> out;
  for (const auto& f : cx.faces()) {
    if (f.empty()) continue;
    auto d = low_degree_homology(link(cx, f), f);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

inline bool is_pure_fan(const Fan& fan) {
  for (const auto& m : fan.max_cones())
    if (m.size() != fan.rank()) return false;
  return true;
}

}  // namespace detail

/// Purity, vanishing of the reduced homology of every link below its top
/// degree, and the same for the whole complex. All three together are
/// equivalent to flatness and to degeneration of the Merkurjev spectral
/// sequence.
inline FlatnessReport flatness_report(const Fan& fan) {
  FlatnessReport r;
  const SimplicialComplex cx = complex_of_fan(fan);
  r.pure = detail::is_pure_fan(fan);
  r.link_offenders = detail::link_defects(cx);
  r.link_conditions_ok = r.link_offenders.empty();
  r.global_offenders = detail::low_degree_homology(cx, {});
  r.global_ok = r.global_offenders.empty();
  r.flat = r.pure && r.link_conditions_ok && r.global_ok;
  r.merkurjev_degenerates = r.flat;
  return r;
}

struct SafetyReport {
  bool safe = false;
  std::vector<LinkDefect> offenders;
};

/// Local condition only: every nonempty face has a link with vanishing
/// reduced homology below the top degree. The empty face is not included.
inline SafetyReport subdivision_safe(const Fan& fan) {
  SafetyReport r;
  r.offenders = detail::link_defects(complex_of_fan(fan));
  r.safe = r.offenders.empty();
  return r;
}

struct TorTable {
  std::size_t n = 0;
  std::map<std::size_t, AbelianGroupInv> entries;  // p = 1..n

  AbelianGroupInv at(std::size_t p) const {
    auto it = entries.find(p);
    return it == entries.end() ? AbelianGroupInv{} : it->second;
  }
  bool all_zero() const {
    for (const auto& [p, g] : entries)
      if (!g.is_zero()) return false;
    return true;
  }
  friend bool operator==(const TorTable&, const TorTable&) = default;
};

/// Throws HypothesesNotMet unless the fan is pure and subdivision safe.
inline void require_tor_hypotheses(const Fan& fan) {
  if (!detail::is_pure_fan(fan))
    throw Error(Errc::HypothesesNotMet, "maximal cones are not all of dimension " + std::to_string(fan.rank()));
  auto safe = subdivision_safe(fan);
  if (!safe.safe) {
    const auto& d = safe.offenders.front();
    throw Error(Errc::HypothesesNotMet, "link of " + fan.describe(d.face) + " has H~_" +
                                            std::to_string(d.degree) + " = " + d.group.to_string() +
                                            " below its top degree");
  }
}

/// Tor_p = ⊕_{i=p+1}^{n} H̃^{i-p-1}(S_Δ, Z^{C(n,i)}) for p = 1..n.
inline TorTable tor_table(const Fan& fan) {
  require_tor_hypotheses(fan);
  const std::size_t n = fan.rank();
  const SimplicialComplex cx = complex_of_fan(fan);
  TorTable t;
  t.n = n;
  for (std::size_t p = 1; p <= n; ++p) {
    AbelianGroupInv sum;
    for (std::size_t i = p + 1; i <= n; ++i) {
      auto co = reduced_cohomology(cx, AbelianGroupInv::free(binomial(n, i)));
      sum += degree(co, static_cast<long>(i - p - 1));
    }
    t.entries[p] = sum;
  }
  return t;
}

/// Tor_p(K_q^T) = (Tor_p(K_0^T) ⊗ K_q) ⊕ Tor_1^Z(Tor_{p-1}(K_0^T), K_q);
/// the second term is absent for p = 1 because Tor_0 is torsion free.
inline TorTable higher_tor_table(const Fan& fan, const AbelianGroupInv& kq) {
  const TorTable base = tor_table(fan);
  TorTable t;
  t.n = base.n;
  for (const auto& [p, g] : base.entries) {
    AbelianGroupInv v = tensor_and_tor1(g, kq).first;
    if (p >= 2) v += tensor_and_tor1(base.at(p - 1), kq).second;
    t.entries[p] = v;
  }
  return t;
}

struct E1Page {
  std::size_t n = 0;
  std::map<std::pair<long, long>, AbelianGroupInv> entries;  // nonzero (p, q) only
  std::size_t tor0_rank_bound = 0;

  AbelianGroupInv at(long p, long q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? AbelianGroupInv{} : it->second;
  }
};

/// E1^{pq} = H^{p+q}(Δ, K_p/K_{p+1}) evaluated under the hypotheses of
/// tor_table:
///   p = 1:        Z^{#maximal cones} at q = −1;
///   2 ≤ p ≤ n:    ⊕_{σ ∈ Δ_{n−p+1}} H̃^{p−2}(lk σ, Z^{C(p−1, −q−1)});
///   p = n + 1:    ⊕_{i=0}^{n} H̃^{n+q+i}(S_Δ, Z^{C(n,i)}).
inline E1Page merkurjev_e1_page(const Fan& fan) {
  require_tor_hypotheses(fan);
  const long n = static_cast<long>(fan.rank());
  const SimplicialComplex cx = complex_of_fan(fan);
  E1Page page;
  page.n = fan.rank();
  auto put = [&](long p, long q, const AbelianGroupInv& g) {
    if (!g.is_zero()) page.entries[{p, q}] += g;
  };

  if (n >= 1) put(1, -1, AbelianGroupInv::free(fan.max_cones().size()));
  for (long p = 2; p <= n; ++p) {
    const auto cones = fan.cones_of_dim(static_cast<std::size_t>(n - p + 1));
    std::vector<std::vector<AbelianGroupInv>> link_co;
    for (const auto& c : cones) link_co.push_back(reduced_cohomology(link(cx, c), AbelianGroupInv::free(1)));
    for (long k = 0; k <= p - 1; ++k) {
      const long q = -k - 1;
      const std::size_t coeff = binomial(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(k));
      for (const auto& co : link_co) put(p, q, degree(co, p - 2).power(coeff));
    }
  }
  const auto global = reduced_cohomology(cx, AbelianGroupInv::free(1));
  for (long q = -2 * n - 2; q <= 0; ++q)
    for (long i = 0; i <= n; ++i)
      put(n + 1, q, degree(global, n + q + i).power(binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(i))));

  for (long p = 1; p <= n + 1; ++p) page.tor0_rank_bound += page.at(p, -p).free_rank;
  return page;
}

struct BlowupDelta {
  std::map<std::size_t, AbelianGroupInv> delta;  // i = 1..rank of the fan
  bool invariant = true;
  Fan orbit_fan;
};

/// Predicted change Tor_i(X') ⊖ Tor_i(X) under star subdivision at sigma:
/// the (d−1)-fold power of Tor_i of the orbit closure of sigma, d = dim σ.
inline BlowupDelta blowup_tor_delta(const Fan& fan, const RaySet& sigma) {
  if (!fan.contains_cone(sigma)) throw Error(Errc::ConeNotInFan, index_set_to_string(sigma));
  if (sigma.size() <= 1)
    throw Error(Errc::DimensionTooSmall, fan.describe(sigma) + " has dimension " + std::to_string(sigma.size()));
  BlowupDelta out;
  out.orbit_fan = orbit_closure_fan(fan, sigma);
  TorTable y;
  try {
    y = tor_table(out.orbit_fan);
  } catch (const Error& e) {
    if (e.code() != Errc::HypothesesNotMet) throw;
    throw Error(Errc::HypothesesNotMet, "orbit closure of " + fan.describe(sigma) + ": " + e.what());
  }
  for (std::size_t i = 1; i <= fan.rank(); ++i) {
    out.delta[i] = y.at(i).power(sigma.size() - 1);
    if (!out.delta[i].is_zero()) out.invariant = false;
  }
  return out;
}

}  // namespace fantor
