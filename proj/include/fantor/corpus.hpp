#pragma once

// Small regular fans used by the self test, the examples and the test
// suites.

#include <string>
#include <vector>

#include "fantor/error.hpp"
#include "fantor/fan.hpp"

namespace fantor::corpus {

inline FanData affine_plane() { return {2, {{1, 0}, {0, 1}}, {{0, 1}}, "affine_plane"}; }

inline FanData projective_line() { return {1, {{1}, {-1}}, {{0}, {1}}, "projective_line"}; }

inline FanData projective_plane() {
  return {2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}, "projective_plane"};
}

inline FanData product_of_two_lines() {
  return {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "p1_x_p1"};
}

/// All eight coordinate octants; rays ±e_i at indices i and i+3.
inline FanData product_of_three_lines() {
  FanData d{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, {}, "p1_x_p1_x_p1"};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) d.cones.push_back({0 + 3 * a, 1 + 3 * b, 2 + 3 * c});
  return d;
}

/// pos(e1,e2) and pos(−e1,−e2): two quadrants meeting only at the origin.
inline FanData two_opposite_quadrants() {
  return {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {2, 3}}, "two_opposite_quadrants"};
}

/// The octants with sign patterns 000, 010, 011 and 111.
inline FanData octant_example() {
  return {3,
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
          {{0, 1, 2}, {0, 4, 2}, {0, 4, 5}, {3, 4, 5}},
          "octant_example"};
}

/// pos(e1,e2,e3,e4) and pos(e1,e2,−e3,−e4); the orbit closure of pos(e1,e2)
/// is the two-opposite-quadrants surface.
inline FanData rank4_blowup_example() {
  return {4,
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, -1}},
          {{0, 1, 2, 3}, {0, 1, 4, 5}},
          "rank4_blowup_example"};
}

/// pos(e1,e2,e3) and pos(−e1,−e2,e3): the link of e3 is two disjoint edges.
inline FanData split_link_example() {
  return {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}, {{0, 1, 2}, {3, 4, 2}},
          "split_link_example"};
}

inline std::vector<FanData> all() {
  return {affine_plane(),         projective_line(),  projective_plane(),
          product_of_two_lines(), product_of_three_lines(), two_opposite_quadrants(),
          octant_example(),       rank4_blowup_example(),   split_link_example()};
}

inline FanData by_name(const std::string& name) {
  for (auto& d : all())
    if (d.name == name) return d;
  throw Error(Errc::ParseError, "no bundled fan named '" + name + "'");
}

}  // namespace fantor::corpus
