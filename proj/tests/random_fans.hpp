#pragma once

// Random valid fans: star subdivisions of complete fans, then subfans.

#include <algorithm>
#include <random>
#include <vector>

#include "fantor/corpus.hpp"
#include "fantor/fan.hpp"

namespace random_fans {

using namespace fantor;

/// A cone of dimension >= 2 chosen uniformly, if any.
inline std::optional<RaySet> random_cone(std::mt19937& rng, const Fan& fan) {
  std::vector<RaySet> big;
  for (const auto& c : fan.cones())
    if (c.size() >= 2) big.push_back(c);
  if (big.empty()) return std::nullopt;
  return big[std::uniform_int_distribution<std::size_t>(0, big.size() - 1)(rng)];
}

inline Fan subdivide_randomly(std::mt19937& rng, Fan fan, std::size_t steps) {
  for (std::size_t s = 0; s < steps; ++s) {
    auto c = random_cone(rng, fan);
    if (!c) break;
    fan = star_subdivision(fan, *c);
  }
  return fan;
}

/// Subfan of a randomly subdivided complete fan of rank 1..3. Occasionally a
/// lower-dimensional cone outside the kept ones is added, giving a non-pure fan.
inline Fan random_fan(std::mt19937& rng) {
  const std::vector<FanData> complete{corpus::projective_line(), corpus::projective_plane(),
                                      corpus::product_of_two_lines(), corpus::product_of_three_lines()};
  Fan base = validate_fan(complete[std::uniform_int_distribution<std::size_t>(0, complete.size() - 1)(rng)]);
  base = subdivide_randomly(rng, base, std::uniform_int_distribution<std::size_t>(0, 2)(rng));

  std::bernoulli_distribution keep(0.6);
  FanData d = base.data();
  d.cones.clear();
  std::vector<RaySet> dropped;
  for (const auto& m : base.max_cones()) (keep(rng) ? d.cones : dropped).push_back(m);
  if (d.cones.empty()) {
    d.cones.push_back(dropped.back());
    dropped.pop_back();
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::vector<RaySet> loose;
    for (const auto& c : base.cones()) {
      if (c.empty() || c.size() == base.rank()) continue;
      bool covered = false;
      for (const auto& k : d.cones) covered = covered || is_subset(c, k);
      if (!covered) loose.push_back(c);
    }
    if (!loose.empty()) d.cones.push_back(loose[std::uniform_int_distribution<std::size_t>(0, loose.size() - 1)(rng)]);
  }
  d.name = "random";
  return validate_fan(d);
}

}  // namespace random_fans
