#pragma once

// Decides whether ⋂_{τ∈Δ} ⋃_{σ∈st τ} (σ + ⟨τ⟩) has nonempty interior.
//
// A finite union of closed cones has interior only if one of its members
// does, so the set has interior iff some choice τ ↦ σ(τ) makes
// ⋂_τ (σ(τ) + ⟨τ⟩) full-dimensional. Only maximal σ need be considered since
// σ ≺ σ' gives σ + ⟨τ⟩ ⊆ σ' + ⟨τ⟩. The search is a depth-first walk over
// choice functions that abandons a branch as soon as the running
// intersection drops below full rank; its worst case is exponential.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fantor/cone.hpp"
#include "fantor/fan.hpp"

namespace fantor::polyhedral {

struct LimitChoice {
  RaySet tau;
  RaySet sigma;
};

struct EnoughLimitsResult {
  bool enough_limits = false;
  /// A choice σ(τ) for every τ whose term is not already the whole space;
  /// present only when enough_limits holds.
  std::vector<LimitChoice> witness;
  /// Terms that actually constrain the search (τ with σ + ⟨τ⟩ ≠ N_R for some σ).
  std::size_t constraining_terms = 0;
  /// Search nodes visited; for a negative answer this is the size of the
  /// exhausted, pruned search tree.
  std::size_t nodes_visited = 0;
};

namespace detail {

struct LimitTerm {
  RaySet tau;
  std::vector<RaySet> options;
  std::vector<std::vector<IntVector>> option_inequalities;
};

struct LimitSearch {
  std::size_t n;
  std::vector<LimitTerm> terms;
  std::vector<std::size_t> choice;
  std::size_t nodes = 0;

  bool descend(std::size_t depth, const std::vector<IntVector>& running) {
    ++nodes;
    if (depth == terms.size()) return true;
    const auto& term = terms[depth];
    for (std::size_t k = 0; k < term.options.size(); ++k) {
      std::vector<IntVector> next = running;
      next.insert(next.end(), term.option_inequalities[k].begin(), term.option_inequalities[k].end());
      ConeGenerators g = generators_from_inequalities(next, n);
      std::vector<IntVector> gens = g.rays;
      gens.insert(gens.end(), g.lineality.begin(), g.lineality.end());
      if (rank_of_vectors(gens, n) < n) continue;
      // keep the inequality system irredundant
      std::vector<IntVector> flat = gens;
      for (const auto& l : g.lineality) flat.push_back(negated(l));
      ConeGenerators dual = generators_from_inequalities(flat, n);
      std::vector<IntVector> minimal = dual.rays;
      for (const auto& l : dual.lineality) {
        minimal.push_back(l);
        minimal.push_back(negated(l));
      }
      choice[depth] = k;
      if (descend(depth + 1, minimal)) return true;
    }
    return false;
  }
};

}  // namespace detail

inline EnoughLimitsResult enough_limits(const Fan& fan) {
  const std::size_t n = fan.rank();
  detail::LimitSearch search{n, {}, {}, 0};
  EnoughLimitsResult result;

  for (const auto& tau : fan.cones()) {
    detail::LimitTerm term{tau, {}, {}};
    bool whole_space = false;
    for (const auto& sigma : fan.maximal_cones_containing(tau)) {
      RationalCone c = RationalCone::cone_plus_span(n, fan.generators(sigma), fan.generators(tau));
      RationalCone full = dual_description(c);
      if (full.inequalities().empty()) {
        whole_space = true;
        break;
      }
      term.options.push_back(sigma);
      term.option_inequalities.push_back(full.inequalities());
    }
    if (!whole_space) search.terms.push_back(std::move(term));
  }
  // forced terms first: they shrink the running cone without branching
  std::stable_sort(search.terms.begin(), search.terms.end(),
                   [](const auto& a, const auto& b) { return a.options.size() < b.options.size(); });
  search.choice.assign(search.terms.size(), 0);
  result.constraining_terms = search.terms.size();

  result.enough_limits = search.descend(0, {});
  result.nodes_visited = search.nodes;
  if (result.enough_limits) {
    for (std::size_t i = 0; i < search.terms.size(); ++i)
      result.witness.push_back({search.terms[i].tau, search.terms[i].options[search.choice[i]]});
    std::sort(result.witness.begin(), result.witness.end(), [](const auto& a, const auto& b) {
      return a.tau.size() != b.tau.size() ? a.tau.size() < b.tau.size() : a.tau < b.tau;
    });
  }
  return result;
}

}  // namespace fantor::polyhedral
