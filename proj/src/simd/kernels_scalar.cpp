#include <cmath>

#include "lcf/simd/kernels.hpp"

namespace lcf::simd::scalar {
namespace {

void contract_gradients(const double* nodal, std::size_t n_nodes, const double* grads,
                        std::size_t n, double* out) {
  for (std::size_t c = 0; c < 9 * n; ++c) out[c] = 0;
  for (std::size_t k = 0; k < n_nodes; ++k)
    for (std::size_t i = 0; i < 3; ++i) {
      const double a = nodal[k * 3 + i];
      for (std::size_t j = 0; j < 3; ++j) {
        const double* g = grads + (k * 3 + j) * n;
        double* o = out + (i * 3 + j) * n;
        for (std::size_t p = 0; p < n; ++p) o[p] += a * g[p];
      }
    }
}

void small_strain(const double* h, const double* jac, std::size_t n, double* strain,
                  double* det) {
  for (std::size_t p = 0; p < n; ++p) {
    double J[9], H[9];
    for (int c = 0; c < 9; ++c) {
      J[c] = jac[c * n + p];
      H[c] = h[c * n + p];
    }
    // adjugate
    const double a00 = J[4] * J[8] - J[5] * J[7];
    const double a01 = J[2] * J[7] - J[1] * J[8];
    const double a02 = J[1] * J[5] - J[2] * J[4];
    const double a10 = J[5] * J[6] - J[3] * J[8];
    const double a11 = J[0] * J[8] - J[2] * J[6];
    const double a12 = J[2] * J[3] - J[0] * J[5];
    const double a20 = J[3] * J[7] - J[4] * J[6];
    const double a21 = J[1] * J[6] - J[0] * J[7];
    const double a22 = J[0] * J[4] - J[1] * J[3];
    const double d = J[0] * a00 + J[1] * a10 + J[2] * a20;
    const double inv = 1 / d;
    const double A[9] = {a00 * inv, a01 * inv, a02 * inv, a10 * inv, a11 * inv,
                         a12 * inv, a20 * inv, a21 * inv, a22 * inv};
    double G[9];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        G[i * 3 + j] = H[i * 3 + 0] * A[0 * 3 + j] + H[i * 3 + 1] * A[1 * 3 + j] +
                       H[i * 3 + 2] * A[2 * 3 + j];
    strain[0 * n + p] = G[0];
    strain[1 * n + p] = G[4];
    strain[2 * n + p] = G[8];
    strain[3 * n + p] = 0.5 * (G[5] + G[7]);
    strain[4 * n + p] = 0.5 * (G[2] + G[6]);
    strain[5 * n + p] = 0.5 * (G[1] + G[3]);
    det[p] = d;
  }
}

void von_mises_from_strain(const double* strain, double lambda, double mu, std::size_t n,
                           double* out) {
  for (std::size_t p = 0; p < n; ++p) {
    const double exx = strain[p], eyy = strain[n + p], ezz = strain[2 * n + p];
    const double vol = lambda * (exx + eyy + ezz);
    const double sxx = vol + 2 * mu * exx, syy = vol + 2 * mu * eyy, szz = vol + 2 * mu * ezz;
    const double syz = 2 * mu * strain[3 * n + p];
    const double sxz = 2 * mu * strain[4 * n + p];
    const double sxy = 2 * mu * strain[5 * n + p];
    const double d01 = sxx - syy, d12 = syy - szz, d20 = szz - sxx;
    out[p] = std::sqrt(0.5 * (d01 * d01 + d12 * d12 + d20 * d20) +
                       3 * (syz * syz + sxz * sxz + sxy * sxy));
  }
}

void chart_gram(const double* jac, const double* t1, const double* t2, std::size_t n,
                double* out) {
  for (std::size_t p = 0; p < n; ++p) {
    double a[3], b[3];
    for (int i = 0; i < 3; ++i) {
      a[i] = jac[(i * 3 + 0) * n + p] * t1[0] + jac[(i * 3 + 1) * n + p] * t1[1] +
             jac[(i * 3 + 2) * n + p] * t1[2];
      b[i] = jac[(i * 3 + 0) * n + p] * t2[0] + jac[(i * 3 + 1) * n + p] * t2[1] +
             jac[(i * 3 + 2) * n + p] * t2[2];
    }
    const double cx = a[1] * b[2] - a[2] * b[1];
    const double cy = a[2] * b[0] - a[0] * b[2];
    const double cz = a[0] * b[1] - a[1] * b[0];
    out[p] = std::sqrt(cx * cx + cy * cy + cz * cz);
  }
}

}  // namespace

const KernelTable kTable = {contract_gradients, small_strain, von_mises_from_strain, chart_gram};

}  // namespace lcf::simd::scalar
