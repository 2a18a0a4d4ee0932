#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "fixtures.hpp"
#include "lcf/error.hpp"
#include "lcf/fields.hpp"

using namespace lcf;
using namespace lcf::testing;

namespace {

Point3 random_point(ElementKind kind, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  while (true) {
    Point3 p(u(rng), u(rng), u(rng));
    if (inside_reference_cell(kind, p)) return p;
  }
}

Eigen::Matrix3d random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("elastic constants") {
  const ElasticConstants c{210000, 0.3};
  CHECK(c.lame_mu() == doctest::Approx(210000 / 2.6));
  CHECK(c.lame_lambda() == doctest::Approx(210000 * 0.3 / (1.3 * 0.4)));
  CHECK_THROWS_AS((ElasticConstants{210000, 0.5}).validate(), DomainError);
  CHECK_THROWS_AS((ElasticConstants{-1, 0.3}).validate(), DomainError);
  CHECK_NOTHROW((ElasticConstants{1, -0.5}).validate());
}

TEST_CASE("von Mises of canonical stress states") {
  StressTensor s;
  s.c = {250, 0, 0, 0, 0, 0};
  CHECK(von_mises(s) == doctest::Approx(250));
  s.c = {-250, 0, 0, 0, 0, 0};
  CHECK(von_mises(s) == doctest::Approx(250));
  s.c = {0, 0, 0, 0, 0, 100};
  CHECK(von_mises(s) == doctest::Approx(100 * std::sqrt(3.0)));
  s.c = {70, 70, 70, 0, 0, 0};
  CHECK(von_mises(s) == doctest::Approx(0).epsilon(1e-12));
  s.c = {100, -100, 0, 0, 0, 0};
  CHECK(von_mises(s) == doctest::Approx(100 * std::sqrt(3.0)));
}

TEST_CASE("von Mises is rotation invariant and matches principal stresses") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Matrix3d a = random_matrix(rng);
    const Eigen::Matrix3d sym = 100 * (a + a.transpose());
    const SymmetricTensor s = SymmetricTensor::symmetric_part(sym);
    const Eigen::Matrix3d q = Eigen::Quaterniond::UnitRandom().toRotationMatrix();
    const SymmetricTensor r = SymmetricTensor::symmetric_part(q * sym * q.transpose());
    CHECK(von_mises(r) == doctest::Approx(von_mises(s)).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(sym);
    const Eigen::Vector3d p = es.eigenvalues();
    const double principal = std::sqrt(0.5 * ((p[0] - p[1]) * (p[0] - p[1]) + (p[1] - p[2]) * (p[1] - p[2]) +
                                              (p[2] - p[0]) * (p[2] - p[0])));
    CHECK(von_mises(s) == doctest::Approx(principal).epsilon(1e-12));
  }
}

TEST_CASE("Hooke's law: uniaxial stress state") {
  const ElasticConstants c{200000, 0.3};
  StrainTensor e;
  const double eps = 1e-3;
  e.c = {eps, -0.3 * eps, -0.3 * eps, 0, 0, 0};
  const StressTensor s = stress_from_strain(e, c);
  CHECK(s.xx() == doctest::Approx(200));
  CHECK(std::abs(s.yy()) < 1e-10);
  CHECK(std::abs(s.zz()) < 1e-10);
  CHECK(von_mises(s) == doctest::Approx(200));
  StrainTensor g;
  g.c = {0, 0, 0, 0, 0, 1e-3};
  CHECK(stress_from_strain(g, c).xy() == doctest::Approx(2e-3 * c.lame_mu()));
}

TEST_CASE("linear displacement gives its symmetric gradient everywhere") {
  std::mt19937_64 rng(23);
  for (ElementKind kind : {ElementKind::Hex20, ElementKind::Tet10}) {
    for (int t = 0; t < 10; ++t) {
      const Eigen::Matrix3d grad = random_matrix(rng);
      const ElementData e = single_element(kind, distorted_map(rng, 0.12), linear_field(grad));
      const SymmetricTensor expected = SymmetricTensor::symmetric_part(grad);
      for (int s = 0; s < 10; ++s) {
        const Point3 xi = random_point(kind, rng);
        CHECK((displacement_gradient(e, xi) - grad).cwiseAbs().maxCoeff() < 1e-11);
        const StrainTensor eps = strain_at(e, xi);
        for (int c = 0; c < 6; ++c) CHECK(std::abs(eps.c[c] - expected.c[c]) < 1e-11);
      }
    }
  }
}

TEST_CASE("zero displacement gives zero strain") {
  std::mt19937_64 rng(29);
  const ElementData e = single_element(ElementKind::Hex20, distorted_map(rng, 0.1), zero_field());
  const StrainTensor eps = strain_at(e, Point3(0.2, 0.5, 0.7));
  for (double v : eps.c) CHECK(v == 0);
}

TEST_CASE("displacement interpolation reproduces nodal values") {
  std::mt19937_64 rng(31);
  const Eigen::Matrix3d grad = random_matrix(rng);
  const ElementData e = single_element(ElementKind::Tet10, distorted_map(rng, 0.1), linear_field(grad));
  for (std::size_t k = 0; k < 10; ++k) {
    const Point3 u = displacement_at(e, reference_node(ElementKind::Tet10, k));
    CHECK((u - e.displacements.row(static_cast<Eigen::Index>(k)).transpose()).norm() < 1e-14);
  }
}
