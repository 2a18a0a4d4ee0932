// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cstdint>

#include "lcf/simd/kernels.hpp"

namespace lcf::simd::avx2 {
namespace {

constexpr std::size_t kLanes = 4;

// Lane mask for a (possibly partial) block starting at p.
inline __m256i lane_mask(std::size_t p, std::size_t n) {
  const std::int64_t left = static_cast<std::int64_t>(n - p);
  const __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(left), idx);
}

inline __m256d load(const double* src, __m256i mask) { return _mm256_maskload_pd(src, mask); }
inline void store(double* dst, __m256i mask, __m256d v) { _mm256_maskstore_pd(dst, mask, v); }

void contract_gradients(const double* nodal, std::size_t n_nodes, const double* grads,
                        std::size_t n, double* out) {
  for (std::size_t p = 0; p < n; p += kLanes) {
    const __m256i mask = lane_mask(p, n);
    __m256d acc[9];
    for (auto& a : acc) a = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n_nodes; ++k) {
      const __m256d g0 = load(grads + (k * 3 + 0) * n + p, mask);
      const __m256d g1 = load(grads + (k * 3 + 1) * n + p, mask);
      const __m256d g2 = load(grads + (k * 3 + 2) * n + p, mask);
      for (std::size_t i = 0; i < 3; ++i) {
        const __m256d a = _mm256_set1_pd(nodal[k * 3 + i]);
        acc[i * 3 + 0] = _mm256_fmadd_pd(a, g0, acc[i * 3 + 0]);
        acc[i * 3 + 1] = _mm256_fmadd_pd(a, g1, acc[i * 3 + 1]);
        acc[i * 3 + 2] = _mm256_fmadd_pd(a, g2, acc[i * 3 + 2]);
      }
    }
    for (std::size_t c = 0; c < 9; ++c) store(out + c * n + p, mask, acc[c]);
  }
}

inline __m256d mul_sub(__m256d a, __m256d b, __m256d c, __m256d d) {
  // a*b - c*d
  return _mm256_fmsub_pd(a, b, _mm256_mul_pd(c, d));
}

void small_strain(const double* h, const double* jac, std::size_t n, double* strain,
                  double* det) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t p = 0; p < n; p += kLanes) {
    const __m256i mask = lane_mask(p, n);
    __m256d J[9], H[9];
    for (int c = 0; c < 9; ++c) {
      J[c] = load(jac + c * n + p, mask);
      H[c] = load(h + c * n + p, mask);
    }
    const __m256d a00 = mul_sub(J[4], J[8], J[5], J[7]);
    const __m256d a01 = mul_sub(J[2], J[7], J[1], J[8]);
    const __m256d a02 = mul_sub(J[1], J[5], J[2], J[4]);
    const __m256d a10 = mul_sub(J[5], J[6], J[3], J[8]);
    const __m256d a11 = mul_sub(J[0], J[8], J[2], J[6]);
    const __m256d a12 = mul_sub(J[2], J[3], J[0], J[5]);
    const __m256d a20 = mul_sub(J[3], J[7], J[4], J[6]);
    const __m256d a21 = mul_sub(J[1], J[6], J[0], J[7]);
    const __m256d a22 = mul_sub(J[0], J[4], J[1], J[3]);
    const __m256d d = _mm256_fmadd_pd(J[0], a00, _mm256_fmadd_pd(J[1], a10, _mm256_mul_pd(J[2], a20)));
    const __m256d inv = _mm256_div_pd(one, d);
    const __m256d A[9] = {_mm256_mul_pd(a00, inv), _mm256_mul_pd(a01, inv), _mm256_mul_pd(a02, inv),
                          _mm256_mul_pd(a10, inv), _mm256_mul_pd(a11, inv), _mm256_mul_pd(a12, inv),
                          _mm256_mul_pd(a20, inv), _mm256_mul_pd(a21, inv), _mm256_mul_pd(a22, inv)};
    __m256d G[9];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        G[i * 3 + j] = _mm256_fmadd_pd(
            H[i * 3 + 0], A[j],
            _mm256_fmadd_pd(H[i * 3 + 1], A[3 + j], _mm256_mul_pd(H[i * 3 + 2], A[6 + j])));
    store(strain + 0 * n + p, mask, G[0]);
    store(strain + 1 * n + p, mask, G[4]);
    store(strain + 2 * n + p, mask, G[8]);
    store(strain + 3 * n + p, mask, _mm256_mul_pd(half, _mm256_add_pd(G[5], G[7])));
    store(strain + 4 * n + p, mask, _mm256_mul_pd(half, _mm256_add_pd(G[2], G[6])));
    store(strain + 5 * n + p, mask, _mm256_mul_pd(half, _mm256_add_pd(G[1], G[3])));
    store(det + p, mask, d);
  }
}

void von_mises_from_strain(const double* strain, double lambda, double mu, std::size_t n,
                           double* out) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d two_mu = _mm256_set1_pd(2 * mu);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d three = _mm256_set1_pd(3.0);
  for (std::size_t p = 0; p < n; p += kLanes) {
    const __m256i mask = lane_mask(p, n);
    const __m256d exx = load(strain + p, mask);
    const __m256d eyy = load(strain + n + p, mask);
    const __m256d ezz = load(strain + 2 * n + p, mask);
    const __m256d vol = _mm256_mul_pd(vl, _mm256_add_pd(_mm256_add_pd(exx, eyy), ezz));
    const __m256d sxx = _mm256_fmadd_pd(two_mu, exx, vol);
    const __m256d syy = _mm256_fmadd_pd(two_mu, eyy, vol);
    const __m256d szz = _mm256_fmadd_pd(two_mu, ezz, vol);
    const __m256d syz = _mm256_mul_pd(two_mu, load(strain + 3 * n + p, mask));
    const __m256d sxz = _mm256_mul_pd(two_mu, load(strain + 4 * n + p, mask));
    const __m256d sxy = _mm256_mul_pd(two_mu, load(strain + 5 * n + p, mask));
    const __m256d d01 = _mm256_sub_pd(sxx, syy);
    const __m256d d12 = _mm256_sub_pd(syy, szz);
    const __m256d d20 = _mm256_sub_pd(szz, sxx);
    const __m256d normal =
        _mm256_fmadd_pd(d01, d01, _mm256_fmadd_pd(d12, d12, _mm256_mul_pd(d20, d20)));
    const __m256d shear =
        _mm256_fmadd_pd(syz, syz, _mm256_fmadd_pd(sxz, sxz, _mm256_mul_pd(sxy, sxy)));
    const __m256d j2 = _mm256_fmadd_pd(half, normal, _mm256_mul_pd(three, shear));
    store(out + p, mask, _mm256_sqrt_pd(j2));
  }
}

void chart_gram(const double* jac, const double* t1, const double* t2, std::size_t n,
                double* out) {
  const __m256d u[3] = {_mm256_set1_pd(t1[0]), _mm256_set1_pd(t1[1]), _mm256_set1_pd(t1[2])};
  const __m256d v[3] = {_mm256_set1_pd(t2[0]), _mm256_set1_pd(t2[1]), _mm256_set1_pd(t2[2])};
  for (std::size_t p = 0; p < n; p += kLanes) {
    const __m256i mask = lane_mask(p, n);
    __m256d a[3], b[3];
    for (int i = 0; i < 3; ++i) {
      const __m256d j0 = load(jac + (i * 3 + 0) * n + p, mask);
      const __m256d j1 = load(jac + (i * 3 + 1) * n + p, mask);
      const __m256d j2 = load(jac + (i * 3 + 2) * n + p, mask);
      a[i] = _mm256_fmadd_pd(j0, u[0], _mm256_fmadd_pd(j1, u[1], _mm256_mul_pd(j2, u[2])));
      b[i] = _mm256_fmadd_pd(j0, v[0], _mm256_fmadd_pd(j1, v[1], _mm256_mul_pd(j2, v[2])));
    }
    const __m256d cx = mul_sub(a[1], b[2], a[2], b[1]);
    const __m256d cy = mul_sub(a[2], b[0], a[0], b[2]);
    const __m256d cz = mul_sub(a[0], b[1], a[1], b[0]);
    const __m256d sq = _mm256_fmadd_pd(cx, cx, _mm256_fmadd_pd(cy, cy, _mm256_mul_pd(cz, cz)));
    store(out + p, mask, _mm256_sqrt_pd(sq));
  }
}

}  // namespace

const KernelTable kTable = {contract_gradients, small_strain, von_mises_from_strain, chart_gram};

}  // namespace lcf::simd::avx2
