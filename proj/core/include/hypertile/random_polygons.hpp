#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "hypertile/polygon.hpp"

namespace hypertile {

using Rng = std::mt19937_64;

/// Simple counterclockwise n-gon, star-shaped about the origin in the Klein
/// model, with Klein radii in [r_min, r_max] and angular gaps below pi.
Polygon random_star_polygon(Rng& rng, std::size_t n, double r_min = 0.2,
                            double r_max = 0.9);

/// Convex hull of a random star polygon, at least `min_vertices` vertices.
Polygon random_convex_polygon(Rng& rng, std::size_t n,
                              std::size_t min_vertices = 4);

/// Rescales a polygon about the origin in Klein coordinates until its area
/// is within `tol` of `target`. The polygon must be star-shaped about the
/// origin. std::nullopt if the target is out of reach.
std::optional<Polygon> scale_to_area(const Polygon& p, double target,
                                     double tol = 1e-10);

struct ComplementaryInstance {
  Polygon polygon;
  /// The complementary pair (indices into polygon).
  std::size_t v = 0;
  std::size_t w = 0;
  bool adjacent = false;
  /// The polygon before the pair was added.
  Polygon base;
};

/// Convex polygon with a pair of complementary vertices added: either a
/// bump on one edge and a matching notch on another, or two adjacent
/// vertices exchanged by a half-turn about an edge midpoint. Rejection
/// sampled until simple.
ComplementaryInstance random_complementary_instance(Rng& rng, bool adjacent);

}  // namespace hypertile
