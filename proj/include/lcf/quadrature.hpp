#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lcf/shape_functions.hpp"

namespace lcf {

/// Weighted point rule on a D-dimensional domain. `order` is the largest
/// total polynomial degree integrated exactly.
template <std::size_t D>
struct QuadratureRule {
  std::vector<std::array<double, D>> points;
  std::vector<double> weights;
  int order = 0;

  std::size_t size() const { return weights.size(); }
};

using IntervalRule = QuadratureRule<1>;
using PlaneRule = QuadratureRule<2>;

inline constexpr int kMaxPointsPerDim = 6;

/// Gauss-Legendre rule with `points` nodes on [a, b] (1 <= points <= 6).
IntervalRule gauss_interval(int points, double a = 0, double b = 1);

/// Tensor-product Gauss rule on [0,1]^2 with points^2 nodes.
PlaneRule tensor_square(int points);

/// Rule on the unit triangle {s1, s2 >= 0, s1 + s2 <= 1}.
PlaneRule triangle_rule(int order);
std::span<const int> supported_triangle_orders();

/// Rule for a face map area: tensor_square(points) for quadrilaterals,
/// triangle_rule(2 * points - 1) for triangles.
PlaneRule face_rule(FaceShape shape, int points_per_dim);

/// Nodes and weights of the n-point Gauss rule on [-1, 1] for the weight
/// (1 - x)^alpha (1 + x)^beta, via the Golub-Welsch eigenvalue problem.
IntervalRule gauss_jacobi(int points, double alpha, double beta);

}  // namespace lcf
