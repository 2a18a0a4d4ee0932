#include "lcf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "lcf/error.hpp"

namespace lcf {
namespace {

struct Node1 {
  double offset;  // in units of the interval length, relative to the midpoint
  double weight;  // in units of the interval length
};

// n-point Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
std::vector<Node1> legendre_newton(int n) {
  std::vector<Node1> nodes;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    nodes.push_back({x / 2, w / 2});
  }
  return nodes;
}

// Closed forms for 1..4 points, Newton for more. Sorted by position.
std::vector<Node1> interval_nodes(int n) {
  using std::sqrt;
  switch (n) {
    case 1:
      return {{0.0, 1.0}};
    case 2: {
      const double d = 1 / (2 * sqrt(3.0));
      return {{-d, 0.5}, {d, 0.5}};
    }
    case 3: {
      const double d = 0.5 * sqrt(3.0 / 5.0);
      return {{-d, 5.0 / 18.0}, {0.0, 8.0 / 18.0}, {d, 5.0 / 18.0}};
    }
    case 4: {
      const double outer = 0.5 * sqrt((15 + 2 * sqrt(30.0)) / 35);
      const double inner = 0.5 * sqrt((15 - 2 * sqrt(30.0)) / 35);
      const double w_outer = 0.25 - sqrt(5.0 / 6.0) / 12;
      const double w_inner = 0.25 + sqrt(5.0 / 6.0) / 12;
      return {{-outer, w_outer}, {-inner, w_inner}, {inner, w_inner}, {outer, w_outer}};
    }
    default: {
      auto nodes = legendre_newton(n);
      std::sort(nodes.begin(), nodes.end(),
                [](const Node1& a, const Node1& b) { return a.offset < b.offset; });
      return nodes;
    }
  }
}

PlaneRule collapsed_triangle(int n) {
  const IntervalRule jacobi = gauss_jacobi(n, 1, 0);
  const IntervalRule legendre = gauss_interval(n, 0, 1);
  PlaneRule rule;
  for (std::size_t i = 0; i < jacobi.size(); ++i) {
    const double u = 0.5 * (1 + jacobi.points[i][0]);
    for (std::size_t j = 0; j < legendre.size(); ++j) {
      rule.points.push_back({u, (1 - u) * legendre.points[j][0]});
      rule.weights.push_back(0.25 * jacobi.weights[i] * legendre.weights[j]);
    }
  }
  rule.order = 2 * n - 1;
  return rule;
}

PlaneRule radon7() {
  const double r = std::sqrt(15.0);
  const double a = (6 - r) / 21, b = (6 + r) / 21;
  const double wa = (155 - r) / 2400, wb = (155 + r) / 2400;
  PlaneRule rule;
  rule.points = {{1.0 / 3, 1.0 / 3}, {a, a}, {1 - 2 * a, a}, {a, 1 - 2 * a},
                 {b, b}, {1 - 2 * b, b}, {b, 1 - 2 * b}};
  rule.weights = {9.0 / 80, wa, wa, wa, wb, wb, wb};
  rule.order = 5;
  return rule;
}

constexpr int kTriangleOrders[] = {1, 2, 3, 5, 7, 9, 11};

}  // namespace

IntervalRule gauss_interval(int points, double a, double b) {
  if (points < 1 || points > kMaxPointsPerDim)
    throw DomainError("interval rule needs 1..6 points, got " + std::to_string(points));
  const double mid = 0.5 * (a + b);
  const double len = b - a;
  IntervalRule rule;
  for (const Node1& n : interval_nodes(points)) {
    rule.points.push_back({mid + n.offset * len});
    rule.weights.push_back(n.weight * len);
  }
  rule.order = 2 * points - 1;
  return rule;
}

PlaneRule tensor_square(int points) {
  const IntervalRule line = gauss_interval(points, 0, 1);
  PlaneRule rule;
  for (std::size_t i = 0; i < line.size(); ++i)
    for (std::size_t j = 0; j < line.size(); ++j) {
      rule.points.push_back({line.points[i][0], line.points[j][0]});
      rule.weights.push_back(line.weights[i] * line.weights[j]);
    }
  rule.order = line.order;
  return rule;
}

std::span<const int> supported_triangle_orders() { return kTriangleOrders; }

PlaneRule triangle_rule(int order) {
  switch (order) {
    case 1:
      return {{{1.0 / 3, 1.0 / 3}}, {0.5}, 1};
    case 2:
      return {{{1.0 / 6, 1.0 / 6}, {2.0 / 3, 1.0 / 6}, {1.0 / 6, 2.0 / 3}},
              {1.0 / 6, 1.0 / 6, 1.0 / 6},
              2};
    case 3:
      return collapsed_triangle(2);
    case 5:
      return radon7();
    case 7:
      return collapsed_triangle(4);
    case 9:
      return collapsed_triangle(5);
    case 11:
      return collapsed_triangle(6);
    default:
      throw DomainError("unsupported triangle rule order " + std::to_string(order) +
                        " (supported: 1, 2, 3, 5, 7, 9, 11)");
  }
}

PlaneRule face_rule(FaceShape shape, int points_per_dim) {
  if (shape == FaceShape::Quadrilateral) return tensor_square(points_per_dim);
  if (points_per_dim < 1 || points_per_dim > kMaxPointsPerDim)
    throw DomainError("points per dimension must lie in 1..6");
  return triangle_rule(2 * points_per_dim - 1);
}

IntervalRule gauss_jacobi(int points, double alpha, double beta) {
  if (points < 1) throw DomainError("Gauss-Jacobi rule needs at least one point");
  const int n = points;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    jacobi(k, k) = k == 0 ? (beta - alpha) / (ab + 2) : (beta * beta - alpha * alpha) / (s * (s + 2));
    if (k > 0) {
      const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
      const double den = s * s * (s + 1) * (s - 1);
      jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(num / den);
    }
  }
  const double mu0 = std::pow(2.0, ab + 1) * std::tgamma(alpha + 1) * std::tgamma(beta + 1) /
                     std::tgamma(ab + 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  IntervalRule rule;
  for (int i = 0; i < n; ++i) {
    rule.points.push_back({eig.eigenvalues()(i)});
    const double v0 = eig.eigenvectors()(0, i);
    rule.weights.push_back(mu0 * v0 * v0);
  }
  rule.order = 2 * n - 1;
  return rule;
}

}  // namespace lcf
