#pragma once

#include <cstddef>
#include <string_view>

namespace lcf::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Batched per-face arithmetic over `n` quadrature points. Point-indexed
/// arrays are structure-of-arrays: component c of point p lives at c * n + p.
struct KernelTable {
  /// out[(i*3 + j)*n + p] = sum_k nodal[k*3 + i] * grads[(k*3 + j)*n + p]
  void (*contract_gradients)(const double* nodal, std::size_t n_nodes, const double* grads,
                             std::size_t n, double* out);

  /// Symmetric part of H J^-1 per point (strain in xx,yy,zz,yz,xz,xy order)
  /// and det J. H, J are 9-component row-major 3x3 fields.
  void (*small_strain)(const double* ref_grad, const double* jac, std::size_t n, double* strain,
                       double* det);

  /// von Mises stress of lambda tr(eps) I + 2 mu eps.
  void (*von_mises_from_strain)(const double* strain, double lambda, double mu, std::size_t n,
                                double* out);

  /// |(J t1) x (J t2)|, the square root of the Gram determinant.
  void (*chart_gram)(const double* jac, const double* t1, const double* t2, std::size_t n,
                     double* out);
};

bool isa_available(Isa isa);

/// Kernels for a specific instruction set; throws lcf::Error if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available set, unless overridden by LCF_SIMD=scalar|avx2 in the
/// environment or by set_isa_override().
Isa active_isa();
const KernelTable& active_kernels();
void set_isa_override(Isa isa);
void clear_isa_override();

namespace scalar {
extern const KernelTable kTable;
}
#if defined(LCF_HAVE_AVX2_KERNELS)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

}  // namespace lcf::simd
